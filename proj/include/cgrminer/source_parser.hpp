#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cgrminer/code_model.hpp"
#include "cgrminer/errors.hpp"

namespace cgrminer {

/// Splits Java-like source text into tokens: identifiers, keywords, number
/// literals and quoted literals survive as single tokens (quotes included),
/// every other non-space character becomes a one-character token. Comments
/// and whitespace are dropped.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0, line = 1;
    const std::size_t n = text.size();
    auto is_ident_start = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    };
    auto is_ident_part = [&](char c) {
        return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    };
    while (i < n) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n')
                ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            std::size_t start_line = line;
            i += 2;
            while (true) {
                if (i + 1 >= n)
                    throw UnterminatedCommentError(start_line);
                if (text[i] == '\n')
                    ++line;
                if (text[i] == '*' && text[i + 1] == '/') {
                    i += 2;
                    break;
                }
                ++i;
            }
            continue;
        }
        if (c == '"' || c == '\'') {
            std::size_t start_line = line;
            std::string literal(1, c);
            ++i;
            while (true) {
                if (i >= n)
                    throw UnterminatedStringError(start_line);
                char d = text[i];
                if (d == '\n')
                    ++line;
                if (d == '\\' && i + 1 < n) {
                    literal += d;
                    literal += text[i + 1];
                    i += 2;
                    continue;
                }
                literal += d;
                ++i;
                if (d == c)
                    break;
            }
            tokens.push_back(std::move(literal));
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < n && is_ident_part(text[j]))
                ++j;
            tokens.emplace_back(text.substr(i, j - i));
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                             text[j] == '.' || text[j] == '_'))
                ++j;
            tokens.emplace_back(text.substr(i, j - i));
            i = j;
            continue;
        }
        tokens.emplace_back(1, c);
        ++i;
    }
    return tokens;
}

namespace detail {

inline bool is_modifier_token(const std::string& t) {
    return t == "public" || t == "protected" || t == "private" || t == "static" ||
           t == "final" || t == "abstract" || t == "synchronized" || t == "native" ||
           t == "transient" || t == "volatile" || t == "strictfp" || t == "default";
}

inline bool is_type_decl_token(const std::string& t) {
    return t == "class" || t == "interface" || t == "enum" || t == "record";
}

/// Recursive-descent pass over the token stream. Never throws: anything it
/// cannot make sense of is skipped to the next safe point and noted as a
/// warning, so a broken file degrades to fewer (or zero) declarations.
class SourceParser {
  public:
    SourceParser(std::string path, std::vector<std::string> tokens,
                 std::vector<std::string>* warnings)
        : path_(std::move(path)), toks_(std::move(tokens)), warnings_(warnings) {}

    SourceFile run() {
        SourceFile file;
        file.path = path_;
        if (peek() == "package") {
            advance();
            file.package_name = parse_dotted_name();
            skip_past(";");
        }
        while (!at_end()) {
            if (peek() == ";") {
                advance();
                continue;
            }
            if (peek() == "import") {
                skip_past(";");
                continue;
            }
            if (peek() == "@") {
                skip_annotation();
                continue;
            }
            AccessModifier access = AccessModifier::PackagePrivate;
            bool saw_decl_keyword = false;
            while (is_modifier_token(peek()) || peek() == "@") {
                if (peek() == "@") {
                    skip_annotation();
                    continue;
                }
                if (peek() == "public")
                    access = AccessModifier::Public;
                advance();
            }
            if (peek() == "class") {
                advance();
                parse_class(file, access);
                saw_decl_keyword = true;
            } else if (is_type_decl_token(peek())) {
                advance();
                skip_type_declaration();
                saw_decl_keyword = true;
            }
            if (!saw_decl_keyword)
                skip_garbage();
        }
        return file;
    }

  private:
    std::string path_;
    std::vector<std::string> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string>* warnings_;

    static const std::string& empty_token() {
        static const std::string empty;
        return empty;
    }

    bool at_end() const { return pos_ >= toks_.size(); }

    const std::string& peek(std::size_t ahead = 0) const {
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : empty_token();
    }

    void advance() {
        if (pos_ < toks_.size())
            ++pos_;
    }

    bool accept(const std::string& tok) {
        if (peek() == tok) {
            advance();
            return true;
        }
        return false;
    }

    void warn(const std::string& message) {
        if (warnings_)
            warnings_->push_back(path_ + ": " + message);
    }

    static bool is_identifier(const std::string& t) {
        if (t.empty())
            return false;
        char c = t[0];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    }

    bool identifier_ahead() const {
        return is_identifier(peek()) && !is_modifier_token(peek()) &&
               !is_type_decl_token(peek());
    }

    std::string parse_dotted_name() {
        std::string name = peek();
        advance();
        while (peek() == "." && is_identifier(peek(1))) {
            advance();
            name += "." + peek();
            advance();
        }
        return name;
    }

    void skip_past(const std::string& tok) {
        while (!at_end() && peek() != tok)
            advance();
        accept(tok);
    }

    void skip_balanced(const std::string& open, const std::string& close) {
        // expects the current token to be `open`
        int depth = 0;
        while (!at_end()) {
            if (peek() == open)
                ++depth;
            else if (peek() == close && --depth == 0) {
                advance();
                return;
            }
            advance();
        }
    }

    void skip_annotation() {
        advance(); // "@"
        if (identifier_ahead())
            parse_dotted_name();
        if (peek() == "(")
            skip_balanced("(", ")");
    }

    /// Consumes an interface/enum/record (or unsupported nested type) whose
    /// `interface`/`enum`/`record`/`class` keyword has already been eaten.
    void skip_type_declaration() {
        while (!at_end() && peek() != "{" && peek() != ";")
            advance();
        if (peek() == "{")
            skip_balanced("{", "}");
        else
            accept(";");
    }

    void skip_garbage() {
        bool skipped = false;
        while (!at_end() && !is_type_decl_token(peek()) && !is_modifier_token(peek()) &&
               peek() != "@" && peek() != "import" && peek() != ";") {
            advance();
            skipped = true;
        }
        if (skipped)
            warn("unrecognized top-level construct skipped");
        else
            advance(); // modifier-looking token that led nowhere
    }

    std::string parse_type() {
        std::string type = parse_dotted_name();
        while (true) {
            if (peek() == "<") {
                int depth = 0;
                while (!at_end()) {
                    if (peek() == "<")
                        ++depth;
                    else if (peek() == ">" && --depth == 0) {
                        type += ">";
                        advance();
                        break;
                    }
                    type += peek();
                    advance();
                }
                continue;
            }
            if (peek() == "[" && peek(1) == "]") {
                type += "[]";
                advance();
                advance();
                continue;
            }
            if (peek() == "." && peek(1) == "." && peek(2) == ".") {
                type += "...";
                advance();
                advance();
                advance();
                continue;
            }
            if (peek() == "." && is_identifier(peek(1))) {
                advance();
                type += "." + peek();
                advance();
                continue;
            }
            break;
        }
        return type;
    }

    TokenBag capture_braced_body() {
        // expects the current token to be "{"; outer braces are not captured
        std::vector<std::string> body;
        int depth = 0;
        while (!at_end()) {
            if (peek() == "{") {
                if (depth > 0)
                    body.push_back(peek());
                ++depth;
            } else if (peek() == "}") {
                if (--depth == 0) {
                    advance();
                    break;
                }
                body.push_back(peek());
            } else if (depth > 0) {
                body.push_back(peek());
            }
            advance();
        }
        return make_bag(body);
    }

    bool comma_starts_declarator() const {
        // "int a = 1, b = 2;" vs a comma inside "new HashMap<String, Integer>()"
        return is_identifier(peek(1)) &&
               (peek(2) == "=" || peek(2) == "," || peek(2) == ";");
    }

    TokenBag capture_initializer() {
        // everything after "=" up to the declarator-level "," or ";"
        std::vector<std::string> init;
        int parens = 0, braces = 0, brackets = 0;
        while (!at_end()) {
            const std::string& t = peek();
            if (parens == 0 && braces == 0 && brackets == 0 &&
                (t == ";" || (t == "," && comma_starts_declarator())))
                break;
            if (t == "(")
                ++parens;
            else if (t == ")")
                --parens;
            else if (t == "{")
                ++braces;
            else if (t == "}")
                --braces;
            else if (t == "[")
                ++brackets;
            else if (t == "]")
                --brackets;
            init.push_back(t);
            advance();
        }
        return make_bag(init);
    }

    void parse_class(SourceFile& file, AccessModifier access) {
        if (!identifier_ahead()) {
            warn("class declaration without a name skipped");
            skip_type_declaration();
            return;
        }
        ClassDecl decl;
        decl.name = peek();
        advance();
        decl.access = access;
        decl.qualified_name =
            file.package_name.empty() ? decl.name : file.package_name + "." + decl.name;
        if (peek() == "<")
            skip_balanced("<", ">");
        if (accept("extends"))
            decl.superclass_name = parse_type();
        if (accept("implements")) {
            while (!at_end() && peek() != "{")
                advance();
        }
        if (peek() != "{") {
            warn("class " + decl.name + " has no body, skipped");
            skip_past(";");
            return;
        }
        advance(); // "{"
        parse_members(decl);
        file.classes.push_back(std::move(decl));
    }

    void parse_members(ClassDecl& decl) {
        while (!at_end()) {
            if (peek() == "}") {
                advance();
                return;
            }
            if (peek() == ";") {
                advance();
                continue;
            }
            if (peek() == "@") {
                skip_annotation();
                continue;
            }
            if (peek() == "{") { // instance initializer block
                skip_balanced("{", "}");
                continue;
            }
            AccessModifier access = AccessModifier::PackagePrivate;
            while (is_modifier_token(peek()) || peek() == "@") {
                if (peek() == "@") {
                    skip_annotation();
                    continue;
                }
                if (peek() == "public")
                    access = AccessModifier::Public;
                else if (peek() == "protected")
                    access = AccessModifier::Protected;
                else if (peek() == "private")
                    access = AccessModifier::Private;
                advance();
            }
            if (peek() == "{") { // "static { ... }"
                skip_balanced("{", "}");
                continue;
            }
            if (is_type_decl_token(peek())) {
                advance();
                skip_type_declaration();
                continue;
            }
            if (peek() == "<") { // generic method's type parameters
                skip_balanced("<", ">");
            }
            if (identifier_ahead() && peek(1) == "(") {
                // constructor: no return type before the parameter list
                advance();
                skip_balanced("(", ")");
                while (!at_end() && peek() != "{" && peek() != ";")
                    advance();
                if (peek() == "{")
                    skip_balanced("{", "}");
                else
                    accept(";");
                continue;
            }
            if (!identifier_ahead()) {
                warn("unrecognized member near '" + peek() + "' skipped");
                recover_member();
                continue;
            }
            std::string type = parse_type();
            if (!identifier_ahead()) {
                warn("unrecognized member after type '" + type + "' skipped");
                recover_member();
                continue;
            }
            std::string name = peek();
            advance();
            if (peek() == "(") {
                parse_method_rest(decl, access, type, name);
            } else {
                parse_attribute_rest(decl, access, type, name);
            }
        }
        warn("class " + decl.name + " body ends before '}'");
    }

    void parse_method_rest(ClassDecl& decl, AccessModifier access, const std::string& ret,
                           const std::string& name) {
        MethodDecl method;
        method.name = name;
        method.return_type = ret;
        method.access = access;
        advance(); // "("
        while (!at_end() && peek() != ")") {
            if (peek() == ",") {
                advance();
                continue;
            }
            if (peek() == "@") {
                skip_annotation();
                continue;
            }
            if (peek() == "final") {
                advance();
                continue;
            }
            if (!identifier_ahead()) {
                advance();
                continue;
            }
            method.parameter_types.push_back(parse_type());
            if (identifier_ahead())
                advance(); // parameter name
        }
        accept(")");
        while (!at_end() && peek() != "{" && peek() != ";")
            advance(); // throws clause
        if (peek() == "{")
            method.body_tokens = capture_braced_body();
        else
            accept(";"); // abstract or native: empty body
        decl.methods.push_back(std::move(method));
    }

    void parse_attribute_rest(ClassDecl& decl, AccessModifier access, const std::string& type,
                              std::string name) {
        while (true) {
            AttributeDecl attr;
            attr.name = std::move(name);
            attr.type_name = type;
            attr.access = access;
            if (accept("="))
                attr.initializer_tokens = capture_initializer();
            decl.attributes.push_back(std::move(attr));
            if (accept(",")) {
                if (!identifier_ahead()) {
                    warn("attribute list for '" + type + "' ends unexpectedly");
                    recover_member();
                    return;
                }
                name = peek();
                advance();
                continue;
            }
            if (!accept(";")) {
                warn("attribute " + decl.attributes.back().name + " not terminated");
                recover_member();
            }
            return;
        }
    }

    void recover_member() {
        while (!at_end()) {
            if (peek() == ";") {
                advance();
                return;
            }
            if (peek() == "{") {
                skip_balanced("{", "}");
                return;
            }
            if (peek() == "}")
                return; // class closer, handled by parse_members
            advance();
        }
    }
};

} // namespace detail

/// Parses one file of the supported Java subset. Lenient: malformed input
/// degrades to a SourceFile with fewer declarations plus warnings, it never
/// throws.
inline SourceFile parse_source_file(const std::string& path, std::string_view text,
                                    std::vector<std::string>* warnings = nullptr) {
    std::vector<std::string> tokens;
    try {
        tokens = tokenize(text);
    } catch (const TokenizeError& err) {
        if (warnings)
            warnings->push_back(path + ": " + err.what());
        SourceFile file;
        file.path = path;
        return file;
    }
    return detail::SourceParser(path, std::move(tokens), warnings).run();
}

/// Parses every file whose path ends with `extension` (others are ignored)
/// and indexes the surviving class declarations. Warnings are sorted by the
/// path they concern.
inline Snapshot build_snapshot(const std::map<std::string, std::string>& files,
                               const std::string& extension = ".java") {
    Snapshot snap;
    for (const auto& [path, text] : files) {
        if (path.size() < extension.size() ||
            path.compare(path.size() - extension.size(), extension.size(), extension) != 0)
            continue;
        snap.files[path] = parse_source_file(path, text, &snap.warnings);
    }
    detail::index_snapshot(snap);
    std::sort(snap.warnings.begin(), snap.warnings.end());
    return snap;
}

} // namespace cgrminer
