#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgrminer/code_model.hpp"
#include "cgrminer/refactoring.hpp"

namespace cgrminer {

/// Dice coefficient over token multisets: 2*|a&b| / (|a|+|b|).
/// Two empty bags count as identical (1.0).
inline double similarity(const TokenBag& a, const TokenBag& b) {
    std::size_t total = bag_size(a) + bag_size(b);
    if (total == 0)
        return 1.0;
    std::size_t common = 0;
    for (const auto& [token, count] : a) {
        auto it = b.find(token);
        if (it != b.end())
            common += static_cast<std::size_t>(std::min(count, it->second));
    }
    return 2.0 * static_cast<double>(common) / static_cast<double>(total);
}

inline std::string method_qualified_name(const std::string& class_qname, const MethodDecl& m) {
    return class_qname + "." + m.signature();
}

inline std::string attribute_qualified_name(const std::string& class_qname,
                                            const AttributeDecl& a) {
    return class_qname + "." + a.name;
}

/// Class similarity compares what the classes contain, not how they are
/// named: a Dice coefficient over the multiset of member signature strings.
inline double class_similarity(const ClassDecl& a, const ClassDecl& b) {
    auto signature_bag = [](const ClassDecl& c) {
        TokenBag bag;
        for (const MethodDecl& m : c.methods)
            ++bag[m.signature()];
        for (const AttributeDecl& attr : c.attributes)
            ++bag[attr.name + ":" + attr.type_name];
        return bag;
    };
    return similarity(signature_bag(a), signature_bag(b));
}

inline double method_similarity(const MethodDecl& a, const MethodDecl& b) {
    return similarity(a.body_tokens, b.body_tokens);
}

inline double attribute_similarity(const AttributeDecl& a, const AttributeDecl& b) {
    auto feature_bag = [](const AttributeDecl& attr) {
        TokenBag bag = attr.initializer_tokens;
        ++bag[attr.type_name];
        return bag;
    };
    return similarity(feature_bag(a), feature_bag(b));
}

struct MatchPair {
    EntityKind kind = EntityKind::Class;
    std::string before_name;
    std::string after_name;
    double similarity = 0.0;

    bool operator==(const MatchPair&) const = default;
};

namespace detail {

struct ClassPairing {
    const ClassEntry* before = nullptr;
    const ClassEntry* after = nullptr;
    double sim = 1.0;
};

struct MethodSide {
    const ClassEntry* cls = nullptr;
    const MethodDecl* decl = nullptr;
    std::string qname;
};

struct MethodPairing {
    MethodSide before, after;
    double sim = 1.0;
};

struct AttrSide {
    const ClassEntry* cls = nullptr;
    const AttributeDecl* decl = nullptr;
    std::string qname;
};

struct AttrPairing {
    AttrSide before, after;
    double sim = 1.0;
};

struct Matching {
    std::vector<ClassPairing> classes;
    std::vector<MethodPairing> methods;
    std::vector<AttrPairing> attributes;
};

/// Greedy maximum-similarity pass shared by all entity kinds: candidates at
/// or above the threshold, highest similarity first, ties broken by the
/// (before name, after name) pair, each entity used at most once.
template <typename Side, typename SimFn, typename Emit>
void greedy_match(const std::vector<Side>& before, const std::vector<Side>& after,
                  double threshold, SimFn&& sim_of, Emit&& emit) {
    struct Candidate {
        double sim;
        std::size_t b, a;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < before.size(); ++i)
        for (std::size_t j = 0; j < after.size(); ++j) {
            double s = sim_of(before[i], after[j]);
            if (s >= threshold)
                candidates.push_back({s, i, j});
        }
    std::sort(candidates.begin(), candidates.end(), [&](const Candidate& x, const Candidate& y) {
        if (x.sim != y.sim)
            return x.sim > y.sim;
        if (before[x.b].qname != before[y.b].qname)
            return before[x.b].qname < before[y.b].qname;
        return after[x.a].qname < after[y.a].qname;
    });
    std::vector<bool> b_used(before.size(), false), a_used(after.size(), false);
    for (const Candidate& c : candidates) {
        if (b_used[c.b] || a_used[c.a])
            continue;
        b_used[c.b] = a_used[c.a] = true;
        emit(before[c.b], after[c.a], c.sim);
    }
}

struct ClassSide {
    const ClassEntry* entry = nullptr;
    std::string qname;
};

inline Matching compute_matching(const Snapshot& before, const Snapshot& after,
                                 double threshold) {
    Matching m;

    std::set<std::string> b_class_matched, a_class_matched;
    for (const auto& [qname, b_entry] : before.classes) {
        const ClassEntry* a_entry = after.find_class(qname);
        if (a_entry) {
            m.classes.push_back({&b_entry, a_entry, 1.0});
            b_class_matched.insert(qname);
            a_class_matched.insert(qname);
        }
    }
    std::vector<ClassSide> b_pool, a_pool;
    for (const auto& [qname, entry] : before.classes)
        if (!b_class_matched.count(qname))
            b_pool.push_back({&entry, qname});
    for (const auto& [qname, entry] : after.classes)
        if (!a_class_matched.count(qname))
            a_pool.push_back({&entry, qname});
    greedy_match(
        b_pool, a_pool, threshold,
        [](const ClassSide& x, const ClassSide& y) {
            return class_similarity(x.entry->decl, y.entry->decl);
        },
        [&](const ClassSide& x, const ClassSide& y, double sim) {
            m.classes.push_back({x.entry, y.entry, sim});
        });
    std::sort(m.classes.begin(), m.classes.end(),
              [](const ClassPairing& x, const ClassPairing& y) {
                  if (x.before->decl.qualified_name != y.before->decl.qualified_name)
                      return x.before->decl.qualified_name < y.before->decl.qualified_name;
                  return x.after->decl.qualified_name < y.after->decl.qualified_name;
              });

    // members matched by identical signature inside corresponding classes
    std::set<const MethodDecl*> m_matched;
    std::set<const AttributeDecl*> a_matched;
    for (const ClassPairing& pair : m.classes) {
        std::vector<const MethodDecl*> remaining;
        for (const MethodDecl& am : pair.after->decl.methods)
            remaining.push_back(&am);
        for (const MethodDecl& bm : pair.before->decl.methods) {
            auto it = std::find_if(remaining.begin(), remaining.end(),
                                   [&](const MethodDecl* am) {
                                       return am->signature() == bm.signature();
                                   });
            if (it == remaining.end())
                continue;
            m.methods.push_back(
                {{pair.before, &bm, method_qualified_name(pair.before->decl.qualified_name, bm)},
                 {pair.after, *it, method_qualified_name(pair.after->decl.qualified_name, **it)},
                 1.0});
            m_matched.insert(&bm);
            m_matched.insert(*it);
            remaining.erase(it);
        }
        std::vector<const AttributeDecl*> attrs_remaining;
        for (const AttributeDecl& aa : pair.after->decl.attributes)
            attrs_remaining.push_back(&aa);
        for (const AttributeDecl& ba : pair.before->decl.attributes) {
            auto it = std::find_if(attrs_remaining.begin(), attrs_remaining.end(),
                                   [&](const AttributeDecl* aa) { return aa->name == ba.name; });
            if (it == attrs_remaining.end())
                continue;
            m.attributes.push_back(
                {{pair.before, &ba,
                  attribute_qualified_name(pair.before->decl.qualified_name, ba)},
                 {pair.after, *it,
                  attribute_qualified_name(pair.after->decl.qualified_name, **it)},
                 1.0});
            a_matched.insert(&ba);
            a_matched.insert(*it);
            attrs_remaining.erase(it);
        }
    }

    // global pools for everything still unmatched, enabling cross-class moves
    std::vector<MethodSide> bm_pool, am_pool;
    std::vector<AttrSide> ba_pool, aa_pool;
    for (const auto& [qname, entry] : before.classes) {
        for (const MethodDecl& md : entry.decl.methods)
            if (!m_matched.count(&md))
                bm_pool.push_back({&entry, &md, method_qualified_name(qname, md)});
        for (const AttributeDecl& ad : entry.decl.attributes)
            if (!a_matched.count(&ad))
                ba_pool.push_back({&entry, &ad, attribute_qualified_name(qname, ad)});
    }
    for (const auto& [qname, entry] : after.classes) {
        for (const MethodDecl& md : entry.decl.methods)
            if (!m_matched.count(&md))
                am_pool.push_back({&entry, &md, method_qualified_name(qname, md)});
        for (const AttributeDecl& ad : entry.decl.attributes)
            if (!a_matched.count(&ad))
                aa_pool.push_back({&entry, &ad, attribute_qualified_name(qname, ad)});
    }
    greedy_match(
        bm_pool, am_pool, threshold,
        [](const MethodSide& x, const MethodSide& y) {
            return method_similarity(*x.decl, *y.decl);
        },
        [&](const MethodSide& x, const MethodSide& y, double sim) {
            m.methods.push_back({x, y, sim});
        });
    greedy_match(
        ba_pool, aa_pool, threshold,
        [](const AttrSide& x, const AttrSide& y) {
            return attribute_similarity(*x.decl, *y.decl);
        },
        [&](const AttrSide& x, const AttrSide& y, double sim) {
            m.attributes.push_back({x, y, sim});
        });

    auto by_names = [](const auto& x, const auto& y) {
        if (x.before.qname != y.before.qname)
            return x.before.qname < y.before.qname;
        return x.after.qname < y.after.qname;
    };
    std::sort(m.methods.begin(), m.methods.end(), by_names);
    std::sort(m.attributes.begin(), m.attributes.end(), by_names);
    return m;
}

inline std::string simple_type_name(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('<'));
    auto dot = s.rfind('.');
    return dot == std::string::npos ? s : s.substr(dot + 1);
}

inline const ClassEntry* find_by_simple_name(const Snapshot& snap, const std::string& simple) {
    for (const auto& [qname, entry] : snap.classes)
        if (entry.decl.name == simple)
            return &entry;
    return nullptr;
}

/// Follows raw superclass names transitively (by simple-name lookup within
/// `snap`) and reports whether the chain reaches `target_simple`.
inline bool superclass_chain_reaches(const Snapshot& snap, const ClassEntry* from,
                                     const std::string& target_simple) {
    std::set<std::string> seen;
    const ClassEntry* cur = from;
    while (cur && cur->decl.superclass_name) {
        std::string simple = simple_type_name(*cur->decl.superclass_name);
        if (simple == target_simple)
            return true;
        if (!seen.insert(simple).second)
            return false;
        cur = find_by_simple_name(snap, simple);
    }
    return false;
}

} // namespace detail

/// Flat projection of the matcher's result: every matched entity pair with
/// its similarity. Exact-name matches carry similarity 1.0. Sorted by
/// (kind, before name, after name).
inline std::vector<MatchPair> match_entities(const Snapshot& before, const Snapshot& after,
                                             double threshold = 0.5) {
    detail::Matching m = detail::compute_matching(before, after, threshold);
    std::vector<MatchPair> pairs;
    for (const auto& cp : m.classes)
        pairs.push_back({EntityKind::Class, cp.before->decl.qualified_name,
                         cp.after->decl.qualified_name, cp.sim});
    for (const auto& mp : m.methods)
        pairs.push_back({EntityKind::Method, mp.before.qname, mp.after.qname, mp.sim});
    for (const auto& ap : m.attributes)
        pairs.push_back({EntityKind::Attribute, ap.before.qname, ap.after.qname, ap.sim});
    return pairs;
}

/// True iff the location still resolves inside `snap`: the entity exists
/// under that qualified name and (for non-package kinds) lives in the stated
/// file.
inline bool validate_location(const CodeLocation& loc, const Snapshot& snap) {
    switch (loc.entity_kind) {
    case EntityKind::Package: {
        std::string pkg =
            loc.qualified_entity_name == kDefaultPackageName ? "" : loc.qualified_entity_name;
        for (const auto& [qname, entry] : snap.classes)
            if (entry.package_name == pkg)
                return true;
        return false;
    }
    case EntityKind::Class: {
        const ClassEntry* entry = snap.find_class(loc.qualified_entity_name);
        return entry && entry->file_path == loc.file_path;
    }
    case EntityKind::Method: {
        auto paren = loc.qualified_entity_name.find('(');
        if (paren == std::string::npos)
            return false;
        std::string head = loc.qualified_entity_name.substr(0, paren);
        auto dot = head.rfind('.');
        if (dot == std::string::npos)
            return false;
        const ClassEntry* entry = snap.find_class(head.substr(0, dot));
        if (!entry || entry->file_path != loc.file_path)
            return false;
        for (const MethodDecl& m : entry->decl.methods)
            if (method_qualified_name(entry->decl.qualified_name, m) ==
                loc.qualified_entity_name)
                return true;
        return false;
    }
    default: {
        auto dot = loc.qualified_entity_name.rfind('.');
        if (dot == std::string::npos)
            return false;
        const ClassEntry* entry = snap.find_class(loc.qualified_entity_name.substr(0, dot));
        if (!entry || entry->file_path != loc.file_path)
            return false;
        std::string attr = loc.qualified_entity_name.substr(dot + 1);
        for (const AttributeDecl& a : entry->decl.attributes)
            if (a.name == attr)
                return true;
        return false;
    }
    }
}

namespace detail {

inline void emit(DetectionSet& out, RefactoringType type, std::string description,
                 std::vector<CodeLocation> before, std::vector<CodeLocation> after) {
    out.push_back({to_string(type), std::move(description), std::move(before),
                   std::move(after)});
}

} // namespace detail

/// Compares two snapshots and reports every catalog refactoring found.
/// Deterministic: the result is sorted and depends only on the inputs.
inline DetectionSet detect(const Snapshot& before, const Snapshot& after,
                           double threshold = 0.5) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw std::invalid_argument("similarity threshold must be in (0, 1]");
    detail::Matching matching = detail::compute_matching(before, after, threshold);
    DetectionSet out;

    std::map<std::string, std::vector<const ClassEntry*>> before_pkgs = before.packages();
    std::map<std::string, std::vector<const ClassEntry*>> after_pkgs = after.packages();

    // package rules work on the class pairs that crossed package boundaries
    struct CrossMove {
        const detail::ClassPairing* pair;
        bool pure_move; // same simple name, only the package changed
    };
    std::map<std::string, std::vector<CrossMove>> into; // after package -> incoming
    std::map<std::string, std::set<std::string>> out_of; // before package -> target packages
    std::map<std::string, std::size_t> moved_out_count; // before package -> matched leavers
    for (const detail::ClassPairing& pair : matching.classes) {
        const std::string& bp = pair.before->package_name;
        const std::string& ap = pair.after->package_name;
        if (bp == ap)
            continue;
        into[ap].push_back({&pair, pair.before->decl.name == pair.after->decl.name});
        out_of[bp].insert(ap);
        ++moved_out_count[bp];
    }

    std::set<std::pair<std::string, std::string>> suppressed; // (before qname, after qname)
    for (const auto& [q, incoming] : into) {
        if (after_pkgs.count(q) == 0 || before_pkgs.count(q) != 0)
            continue; // only packages that newly appeared can be move/merge targets
        std::set<std::string> sources;
        for (const CrossMove& cm : incoming)
            sources.insert(cm.pair->before->package_name);

        bool all_sources_gone = true;
        for (const std::string& p : sources)
            if (after_pkgs.count(p))
                all_sources_gone = false;

        if (sources.size() >= 2 && all_sources_gone) {
            std::set<CodeLocation> b_locs, a_locs;
            for (const CrossMove& cm : incoming) {
                b_locs.insert(package_location(cm.pair->before->file_path,
                                               cm.pair->before->package_name));
                a_locs.insert(package_location(cm.pair->after->file_path, q));
            }
            std::string names;
            for (const std::string& p : sources)
                names += (names.empty() ? "" : ", ") + display_package(p);
            detail::emit(out, RefactoringType::MergePackage,
                         "packages " + names + " merged into " + display_package(q),
                         {b_locs.begin(), b_locs.end()}, {a_locs.begin(), a_locs.end()});
            continue;
        }
        if (sources.size() == 1 && all_sources_gone) {
            const std::string& p = *sources.begin();
            // a whole-package move: every class of p landed in q and nowhere else
            bool whole = before_pkgs.at(p).size() == incoming.size() &&
                         out_of.at(p).size() == 1 && moved_out_count.at(p) == incoming.size();
            if (whole) {
                std::set<CodeLocation> b_locs, a_locs;
                for (const CrossMove& cm : incoming) {
                    b_locs.insert(package_location(cm.pair->before->file_path, p));
                    a_locs.insert(package_location(cm.pair->after->file_path, q));
                    if (cm.pure_move)
                        suppressed.insert({cm.pair->before->decl.qualified_name,
                                           cm.pair->after->decl.qualified_name});
                }
                detail::emit(out, RefactoringType::MovePackage,
                             "package " + display_package(p) + " moved to " + display_package(q),
                             {b_locs.begin(), b_locs.end()}, {a_locs.begin(), a_locs.end()});
            }
        }
    }
    for (const auto& [p, targets] : out_of) {
        if (after_pkgs.count(p) != 0 || targets.size() < 2)
            continue;
        bool has_new_target = false;
        for (const std::string& t : targets)
            if (before_pkgs.count(t) == 0)
                has_new_target = true;
        bool all_matched = moved_out_count.at(p) == before_pkgs.at(p).size();
        if (!has_new_target || !all_matched)
            continue;
        std::set<CodeLocation> b_locs, a_locs;
        for (const detail::ClassPairing& pair : matching.classes) {
            if (pair.before->package_name != p)
                continue;
            b_locs.insert(package_location(pair.before->file_path, p));
            a_locs.insert(package_location(pair.after->file_path, pair.after->package_name));
        }
        std::string names;
        for (const std::string& t : targets)
            names += (names.empty() ? "" : ", ") + display_package(t);
        detail::emit(out, RefactoringType::SplitPackage,
                     "package " + display_package(p) + " split into " + names,
                     {b_locs.begin(), b_locs.end()}, {a_locs.begin(), a_locs.end()});
    }

    for (const detail::ClassPairing& pair : matching.classes) {
        const ClassDecl& b = pair.before->decl;
        const ClassDecl& a = pair.after->decl;
        std::vector<CodeLocation> b_loc = {class_location(pair.before->file_path,
                                                          b.qualified_name)};
        std::vector<CodeLocation> a_loc = {class_location(pair.after->file_path,
                                                          a.qualified_name)};
        bool moved = pair.before->package_name != pair.after->package_name;
        bool renamed = b.name != a.name;
        if (moved && renamed) {
            detail::emit(out, RefactoringType::MoveAndRenameClass,
                         "class " + b.qualified_name + " moved and renamed to " +
                             a.qualified_name,
                         b_loc, a_loc);
        } else if (moved) {
            if (!suppressed.count({b.qualified_name, a.qualified_name}))
                detail::emit(out, RefactoringType::MoveClass,
                             "class " + b.qualified_name + " moved to " + a.qualified_name,
                             b_loc, a_loc);
        } else if (renamed) {
            detail::emit(out, RefactoringType::RenameClass,
                         "class " + b.qualified_name + " renamed to " + a.qualified_name, b_loc,
                         a_loc);
        } else {
            if (pair.before->file_path != pair.after->file_path &&
                (!before.has_file(pair.after->file_path) ||
                 !after.has_file(pair.before->file_path))) {
                // relocated within its package: only reported when the target
                // file is new or the source file is gone, so that one leg of a
                // copy-then-delete does not count as a move on its own
                detail::emit(out, RefactoringType::MoveClass,
                             "class " + b.qualified_name + " moved from file " +
                                 pair.before->file_path + " to file " + pair.after->file_path,
                             b_loc, a_loc);
            }
            if (b.access != a.access)
                detail::emit(out, RefactoringType::ChangeClassAccessModifier,
                             "class " + b.qualified_name + " access changed from " +
                                 to_string(b.access) + " to " + to_string(a.access),
                             b_loc, a_loc);
        }
    }

    std::set<std::pair<std::string, std::string>> corresponding;
    for (const detail::ClassPairing& pair : matching.classes)
        corresponding.insert(
            {pair.before->decl.qualified_name, pair.after->decl.qualified_name});
    auto classes_correspond = [&](const ClassEntry* cb, const ClassEntry* ca) {
        return corresponding.count(
                   {cb->decl.qualified_name, ca->decl.qualified_name}) != 0;
    };

    for (const detail::MethodPairing& mp : matching.methods) {
        std::vector<CodeLocation> b_loc = {
            {mp.before.cls->file_path, EntityKind::Method, mp.before.qname}};
        std::vector<CodeLocation> a_loc = {
            {mp.after.cls->file_path, EntityKind::Method, mp.after.qname}};
        if (!classes_correspond(mp.before.cls, mp.after.cls)) {
            if (detail::superclass_chain_reaches(after, mp.after.cls,
                                                 mp.before.cls->decl.name))
                detail::emit(out, RefactoringType::PushDownMethod,
                             "method " + mp.before.qname + " pushed down to " +
                                 mp.after.cls->decl.qualified_name,
                             b_loc, a_loc);
            else if (detail::superclass_chain_reaches(before, mp.before.cls,
                                                      mp.after.cls->decl.name))
                detail::emit(out, RefactoringType::PullUpMethod,
                             "method " + mp.before.qname + " pulled up to " +
                                 mp.after.cls->decl.qualified_name,
                             b_loc, a_loc);
            else
                detail::emit(out, RefactoringType::MoveMethod,
                             "method " + mp.before.qname + " moved to " + mp.after.qname, b_loc,
                             a_loc);
            continue;
        }
        const MethodDecl& bm = *mp.before.decl;
        const MethodDecl& am = *mp.after.decl;
        if (bm.name != am.name) {
            detail::emit(out, RefactoringType::RenameMethod,
                         "method " + mp.before.qname + " renamed to " + am.name, b_loc, a_loc);
            continue;
        }
        long delta = static_cast<long>(am.parameter_types.size()) -
                     static_cast<long>(bm.parameter_types.size());
        if (delta != 0) {
            TokenBag b_params = make_bag(bm.parameter_types);
            TokenBag a_params = make_bag(am.parameter_types);
            std::vector<std::string> diff;
            const TokenBag& grew = delta > 0 ? a_params : b_params;
            const TokenBag& shrank = delta > 0 ? b_params : a_params;
            for (const auto& [type, count] : grew) {
                auto it = shrank.find(type);
                int extra = count - (it == shrank.end() ? 0 : it->second);
                for (int i = 0; i < extra; ++i)
                    diff.push_back(type);
            }
            std::size_t n = static_cast<std::size_t>(delta > 0 ? delta : -delta);
            for (std::size_t i = 0; i < n && i < diff.size(); ++i) {
                std::string suffix = n > 1 ? " (" + std::to_string(i + 1) + " of " +
                                                 std::to_string(n) + ")"
                                           : "";
                if (delta > 0)
                    detail::emit(out, RefactoringType::AddParameter,
                                 "parameter " + diff[i] + " added to method " + mp.after.qname +
                                     suffix,
                                 b_loc, a_loc);
                else
                    detail::emit(out, RefactoringType::RemoveParameter,
                                 "parameter " + diff[i] + " removed from method " +
                                     mp.before.qname + suffix,
                                 b_loc, a_loc);
            }
        }
        if (bm.access != am.access)
            detail::emit(out, RefactoringType::ChangeMethodAccessModifier,
                         "method " + mp.after.qname + " access changed from " +
                             to_string(bm.access) + " to " + to_string(am.access),
                         b_loc, a_loc);
    }

    for (const detail::AttrPairing& ap : matching.attributes) {
        std::vector<CodeLocation> b_loc = {
            {ap.before.cls->file_path, EntityKind::Attribute, ap.before.qname}};
        std::vector<CodeLocation> a_loc = {
            {ap.after.cls->file_path, EntityKind::Attribute, ap.after.qname}};
        if (!classes_correspond(ap.before.cls, ap.after.cls)) {
            detail::emit(out, RefactoringType::MoveAttribute,
                         "attribute " + ap.before.qname + " moved to " + ap.after.qname, b_loc,
                         a_loc);
            continue;
        }
        const AttributeDecl& ba = *ap.before.decl;
        const AttributeDecl& aa = *ap.after.decl;
        if (ba.name != aa.name) {
            detail::emit(out, RefactoringType::RenameAttribute,
                         "attribute " + ap.before.qname + " renamed to " + aa.name, b_loc,
                         a_loc);
            continue;
        }
        if (ba.access != aa.access)
            detail::emit(out, RefactoringType::ChangeAttributeAccessModifier,
                         "attribute " + ap.after.qname + " access changed from " +
                             to_string(ba.access) + " to " + to_string(aa.access),
                         b_loc, a_loc);
    }

    DetectionSet validated;
    for (RefactoringInstance& inst : out) {
        bool ok = !inst.before_locations.empty() && !inst.after_locations.empty();
        for (const CodeLocation& loc : inst.before_locations)
            ok = ok && validate_location(loc, before);
        for (const CodeLocation& loc : inst.after_locations)
            ok = ok && validate_location(loc, after);
        if (ok)
            validated.push_back(std::move(inst));
    }
    std::sort(validated.begin(), validated.end());
    validated.erase(std::unique(validated.begin(), validated.end()), validated.end());
    return validated;
}

} // namespace cgrminer
