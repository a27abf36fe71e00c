#pragma once

// Hand-built before/after snapshot pairs, one per catalog refactoring type
// plus the package-rule and matching edge cases. `expected` lists every
// instance the detector must produce, as "type|before names|after names"
// keys, so the same corpus checks recall and precision at once.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cgrminer/detector.hpp"
#include "cgrminer/refactoring.hpp"
#include "cgrminer/source_parser.hpp"

namespace planted {

struct Scenario {
    std::string name;
    std::map<std::string, std::string> before;
    std::map<std::string, std::string> after;
    std::vector<std::string> expected;
};

inline std::string instance_key(const cgrminer::RefactoringInstance& instance) {
    std::string key = instance.type + "|";
    for (std::size_t i = 0; i < instance.before_locations.size(); ++i)
        key += (i ? ";" : "") + instance.before_locations[i].qualified_entity_name;
    key += "|";
    for (std::size_t i = 0; i < instance.after_locations.size(); ++i)
        key += (i ? ";" : "") + instance.after_locations[i].qualified_entity_name;
    return key;
}

inline std::vector<std::string> instance_keys(const cgrminer::DetectionSet& set) {
    std::vector<std::string> keys;
    for (const auto& instance : set)
        keys.push_back(instance_key(instance));
    std::sort(keys.begin(), keys.end());
    return keys;
}

namespace detail {

inline std::string pkg_dir(const std::string& package) {
    std::string dir = package;
    std::replace(dir.begin(), dir.end(), '.', '/');
    return dir;
}

inline std::string path_of(const std::string& package, const std::string& name) {
    return "src/" + pkg_dir(package) + "/" + name + ".java";
}

inline std::string java_class(const std::string& package, const std::string& name,
                              const std::string& members, const std::string& extends = "",
                              bool is_public = true) {
    std::string text = "package " + package + ";\n\n";
    text += is_public ? "public class " : "class ";
    text += name;
    if (!extends.empty())
        text += " extends " + extends;
    text += " {\n" + members + "}\n";
    return text;
}

} // namespace detail

inline std::vector<Scenario> scenarios() {
    using detail::java_class;
    using detail::path_of;
    std::vector<Scenario> all;

    const std::string foo_members = "    private int load = 4;\n\n"
                                    "    public int focus(int lens) {\n"
                                    "        return load * lens + 9;\n"
                                    "    }\n";
    const std::string keep_members = "    public void keepSteady() {\n"
                                     "        ticks = ticks + 1;\n"
                                     "    }\n";

    {
        Scenario s;
        s.name = "move_class";
        s.before = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members)},
                    {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.after = {{path_of("b", "Foo"), java_class("b", "Foo", foo_members)},
                   {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.expected = {"MoveClass|a.Foo|b.Foo"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "rename_class";
        s.before = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members)}};
        s.after = {{path_of("a", "Bar"), java_class("a", "Bar", foo_members)}};
        s.expected = {"RenameClass|a.Foo|a.Bar"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "move_and_rename_class";
        s.before = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members)},
                    {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.after = {{path_of("b", "Baz"), java_class("b", "Baz", foo_members)},
                   {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.expected = {"MoveAndRenameClass|a.Foo|b.Baz"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "change_class_access";
        s.before = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members, "", true)}};
        s.after = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members, "", false)}};
        s.expected = {"ChangeClassAccessModifier|a.Foo|a.Foo"};
        all.push_back(std::move(s));
    }

    const std::string one_members = "    public int first() {\n"
                                    "        return 11;\n"
                                    "    }\n";
    const std::string two_members = "    public int second(String tag) {\n"
                                    "        return tag.length() + 22;\n"
                                    "    }\n";
    {
        Scenario s;
        s.name = "move_package_suppresses_member_moves";
        s.before = {{path_of("a", "One"), java_class("a", "One", one_members)},
                    {path_of("a", "Two"), java_class("a", "Two", two_members)}};
        s.after = {{path_of("b", "One"), java_class("b", "One", one_members)},
                   {path_of("b", "Two"), java_class("b", "Two", two_members)}};
        s.expected = {"MovePackage|a;a|b;b"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "split_package";
        s.before = {{path_of("p", "One"), java_class("p", "One", one_members)},
                    {path_of("p", "Two"), java_class("p", "Two", two_members)}};
        s.after = {{path_of("q1", "One"), java_class("q1", "One", one_members)},
                   {path_of("q2", "Two"), java_class("q2", "Two", two_members)}};
        s.expected = {"MoveClass|p.One|q1.One", "MoveClass|p.Two|q2.Two",
                      "SplitPackage|p;p|q1;q2"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "split_package_into_existing_and_new";
        s.before = {{path_of("p", "One"), java_class("p", "One", one_members)},
                    {path_of("p", "Two"), java_class("p", "Two", two_members)},
                    {path_of("q1", "Keep"), java_class("q1", "Keep", keep_members)}};
        s.after = {{path_of("q1", "One"), java_class("q1", "One", one_members)},
                   {path_of("q1", "Keep"), java_class("q1", "Keep", keep_members)},
                   {path_of("q2", "Two"), java_class("q2", "Two", two_members)}};
        s.expected = {"MoveClass|p.One|q1.One", "MoveClass|p.Two|q2.Two",
                      "SplitPackage|p;p|q1;q2"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "merge_packages";
        s.before = {{path_of("p1", "One"), java_class("p1", "One", one_members)},
                    {path_of("p2", "Two"), java_class("p2", "Two", two_members)}};
        s.after = {{path_of("q", "One"), java_class("q", "One", one_members)},
                   {path_of("q", "Two"), java_class("q", "Two", two_members)}};
        s.expected = {"MergePackage|p1;p2|q;q", "MoveClass|p1.One|q.One",
                      "MoveClass|p2.Two|q.Two"};
        all.push_back(std::move(s));
    }
    const std::string three_members = "    public int third(int a, int b) {\n"
                                      "        return a * b + 33;\n"
                                      "    }\n";
    {
        Scenario s;
        s.name = "merge_three_packages";
        s.before = {{path_of("p1", "One"), java_class("p1", "One", one_members)},
                    {path_of("p2", "Two"), java_class("p2", "Two", two_members)},
                    {path_of("p3", "Three"), java_class("p3", "Three", three_members)}};
        s.after = {{path_of("q", "One"), java_class("q", "One", one_members)},
                   {path_of("q", "Two"), java_class("q", "Two", two_members)},
                   {path_of("q", "Three"), java_class("q", "Three", three_members)}};
        s.expected = {"MergePackage|p1;p2;p3|q;q;q", "MoveClass|p1.One|q.One",
                      "MoveClass|p2.Two|q.Two", "MoveClass|p3.Three|q.Three"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "merge_packages_with_extra_new_class";
        s.before = {{path_of("p1", "One"), java_class("p1", "One", one_members)},
                    {path_of("p2", "Two"), java_class("p2", "Two", two_members)}};
        s.after = {{path_of("q", "One"), java_class("q", "One", one_members)},
                   {path_of("q", "Two"), java_class("q", "Two", two_members)},
                   {path_of("q", "Fresh"), java_class("q", "Fresh", three_members)}};
        s.expected = {"MergePackage|p1;p2|q;q", "MoveClass|p1.One|q.One",
                      "MoveClass|p2.Two|q.Two"};
        all.push_back(std::move(s));
    }

    const std::string hub_members = "    public void route(String message) {\n"
                                    "        backbone.push(message);\n"
                                    "    }\n";
    const std::string filter_members = "    public boolean admit(String message) {\n"
                                       "        return message.startsWith(prefix);\n"
                                       "    }\n";
    {
        Scenario s;
        s.name = "move_class_to_new_file";
        s.before = {{"src/hub/Hub.java", java_class("hub", "Hub", hub_members) + "\n" +
                                             "class Filter {\n" + filter_members + "}\n"}};
        s.after = {{"src/hub/Hub.java", java_class("hub", "Hub", hub_members)},
                   {"src/hub/Filter.java",
                    "package hub;\n\nclass Filter {\n" + filter_members + "}\n"}};
        s.expected = {"MoveClass|hub.Filter|hub.Filter"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "move_class_back_into_shared_file";
        s.before = {{"src/hub/Hub.java", java_class("hub", "Hub", hub_members)},
                    {"src/hub/Filter.java",
                     "package hub;\n\nclass Filter {\n" + filter_members + "}\n"}};
        s.after = {{"src/hub/Hub.java", java_class("hub", "Hub", hub_members) + "\n" +
                                            "class Filter {\n" + filter_members + "}\n"}};
        s.expected = {"MoveClass|hub.Filter|hub.Filter"};
        all.push_back(std::move(s));
    }

    const std::string travel_method = "    public int travel(int steps) {\n"
                                      "        odometer = odometer + steps;\n"
                                      "        return odometer;\n"
                                      "    }\n";
    const std::string keep_a = "    public void keepAlpha() {\n"
                               "        alphaTicks = alphaTicks + 1;\n"
                               "    }\n";
    const std::string keep_b = "    public void keepBeta() {\n"
                               "        betaTicks = betaTicks + 2;\n"
                               "    }\n";
    {
        Scenario s;
        s.name = "move_method";
        s.before = {{path_of("m", "Alpha"), java_class("m", "Alpha", keep_a + travel_method)},
                    {path_of("m", "Beta"), java_class("m", "Beta", keep_b)}};
        s.after = {{path_of("m", "Alpha"), java_class("m", "Alpha", keep_a)},
                   {path_of("m", "Beta"), java_class("m", "Beta", keep_b + travel_method)}};
        s.expected = {"MoveMethod|m.Alpha.travel(int)|m.Beta.travel(int)"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "rename_method";
        std::string before_members = "    public int total() {\n"
                                     "        return base + extras;\n"
                                     "    }\n" +
                                     keep_a;
        std::string after_members = "    public int sum() {\n"
                                    "        return base + extras;\n"
                                    "    }\n" +
                                    keep_a;
        s.before = {{path_of("r", "Calc"), java_class("r", "Calc", before_members)}};
        s.after = {{path_of("r", "Calc"), java_class("r", "Calc", after_members)}};
        s.expected = {"RenameMethod|r.Calc.total()|r.Calc.sum()"};
        all.push_back(std::move(s));
    }

    const std::string describe_method = "    public String describe() {\n"
                                        "        return \"shape:\" + edges;\n"
                                        "    }\n";
    const std::string anchor_method = "    public int anchor() {\n"
                                      "        return 77;\n"
                                      "    }\n";
    const std::string radius_method = "    public int radiusInfo() {\n"
                                      "        return radius * 2;\n"
                                      "    }\n";
    {
        Scenario s;
        s.name = "push_down_method";
        s.before = {
            {path_of("h", "Shape"), java_class("h", "Shape", anchor_method + describe_method)},
            {path_of("h", "Circle"), java_class("h", "Circle", radius_method, "Shape")}};
        s.after = {{path_of("h", "Shape"), java_class("h", "Shape", anchor_method)},
                   {path_of("h", "Circle"),
                    java_class("h", "Circle", radius_method + describe_method, "Shape")}};
        s.expected = {"PushDownMethod|h.Shape.describe()|h.Circle.describe()"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "push_down_method_two_levels";
        const std::string oval_members = "    public int ovalInfo() {\n"
                                         "        return axes;\n"
                                         "    }\n";
        s.before = {
            {path_of("h", "Shape"), java_class("h", "Shape", anchor_method + describe_method)},
            {path_of("h", "Oval"), java_class("h", "Oval", oval_members, "Shape")},
            {path_of("h", "Ellipse"), java_class("h", "Ellipse", radius_method, "Oval")}};
        s.after = {{path_of("h", "Shape"), java_class("h", "Shape", anchor_method)},
                   {path_of("h", "Oval"), java_class("h", "Oval", oval_members, "Shape")},
                   {path_of("h", "Ellipse"),
                    java_class("h", "Ellipse", radius_method + describe_method, "Oval")}};
        s.expected = {"PushDownMethod|h.Shape.describe()|h.Ellipse.describe()"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "pull_up_method";
        s.before = {{path_of("h", "Shape"), java_class("h", "Shape", anchor_method)},
                    {path_of("h", "Circle"),
                     java_class("h", "Circle", radius_method + describe_method, "Shape")}};
        s.after = {
            {path_of("h", "Shape"), java_class("h", "Shape", anchor_method + describe_method)},
            {path_of("h", "Circle"), java_class("h", "Circle", radius_method, "Shape")}};
        s.expected = {"PullUpMethod|h.Circle.describe()|h.Shape.describe()"};
        all.push_back(std::move(s));
    }

    {
        Scenario s;
        s.name = "add_parameter";
        std::string before_members = "    public void note(String msg) {\n"
                                     "        journal.append(msg);\n"
                                     "    }\n";
        std::string after_members = "    public void note(String msg, int level) {\n"
                                    "        journal.append(msg);\n"
                                    "    }\n";
        s.before = {{path_of("p", "Log"), java_class("p", "Log", before_members)}};
        s.after = {{path_of("p", "Log"), java_class("p", "Log", after_members)}};
        s.expected = {"AddParameter|p.Log.note(String)|p.Log.note(String,int)"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "add_two_parameters";
        std::string before_members = "    public void note() {\n"
                                     "        counter = counter + 1;\n"
                                     "    }\n";
        std::string after_members = "    public void note(int level, String tag) {\n"
                                    "        counter = counter + 1;\n"
                                    "    }\n";
        s.before = {{path_of("p", "Log"), java_class("p", "Log", before_members)}};
        s.after = {{path_of("p", "Log"), java_class("p", "Log", after_members)}};
        s.expected = {"AddParameter|p.Log.note()|p.Log.note(int,String)",
                      "AddParameter|p.Log.note()|p.Log.note(int,String)"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "remove_parameter";
        std::string before_members = "    public void note(String msg, int level) {\n"
                                     "        journal.append(msg);\n"
                                     "    }\n";
        std::string after_members = "    public void note(String msg) {\n"
                                    "        journal.append(msg);\n"
                                    "    }\n";
        s.before = {{path_of("p", "Log"), java_class("p", "Log", before_members)}};
        s.after = {{path_of("p", "Log"), java_class("p", "Log", after_members)}};
        s.expected = {"RemoveParameter|p.Log.note(String,int)|p.Log.note(String)"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "change_method_access";
        std::string before_members = "    public int size() {\n"
                                     "        return held;\n"
                                     "    }\n";
        std::string after_members = "    private int size() {\n"
                                    "        return held;\n"
                                    "    }\n";
        s.before = {{path_of("p", "Box"), java_class("p", "Box", before_members)}};
        s.after = {{path_of("p", "Box"), java_class("p", "Box", after_members)}};
        s.expected = {"ChangeMethodAccessModifier|p.Box.size()|p.Box.size()"};
        all.push_back(std::move(s));
    }

    const std::string window_attr = "    private long windowMillis = 3600 * 1000;\n";
    const std::string src_keep = "    private String label = \"source\";\n" + keep_a;
    const std::string sink_keep = "    private String drain = \"sink\";\n" + keep_b;
    {
        Scenario s;
        s.name = "move_attribute";
        s.before = {{path_of("s", "Source"), java_class("s", "Source", src_keep + window_attr)},
                    {path_of("s", "Sink"), java_class("s", "Sink", sink_keep)}};
        s.after = {{path_of("s", "Source"), java_class("s", "Source", src_keep)},
                   {path_of("s", "Sink"), java_class("s", "Sink", sink_keep + window_attr)}};
        s.expected = {"MoveAttribute|s.Source.windowMillis|s.Sink.windowMillis"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "rename_attribute";
        const std::string renamed_attr = "    private long spanMillis = 3600 * 1000;\n";
        s.before = {{path_of("s", "Source"), java_class("s", "Source", src_keep + window_attr)}};
        s.after = {
            {path_of("s", "Source"), java_class("s", "Source", src_keep + renamed_attr)}};
        s.expected = {"RenameAttribute|s.Source.windowMillis|s.Source.spanMillis"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "change_attribute_access";
        const std::string public_attr = "    public long windowMillis = 3600 * 1000;\n";
        s.before = {{path_of("s", "Source"), java_class("s", "Source", src_keep + window_attr)}};
        s.after = {{path_of("s", "Source"), java_class("s", "Source", src_keep + public_attr)}};
        s.expected = {"ChangeAttributeAccessModifier|s.Source.windowMillis|s.Source.windowMillis"};
        all.push_back(std::move(s));
    }

    {
        Scenario s;
        s.name = "rename_method_inside_moved_class";
        const std::string stable = "    private int level = 3;\n\n"
                                   "    public void fuel(int amount) {\n"
                                   "        tank = tank + amount;\n"
                                   "    }\n\n"
                                   "    public void stop() {\n"
                                   "        running = false;\n"
                                   "    }\n";
        const std::string ignite = "\n    public void ignite() {\n"
                                   "        running = true;\n"
                                   "        spark.fire();\n"
                                   "    }\n";
        const std::string start = "\n    public void start() {\n"
                                  "        running = true;\n"
                                  "        spark.fire();\n"
                                  "    }\n";
        s.before = {{path_of("a", "Engine"), java_class("a", "Engine", stable + ignite)},
                    {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.after = {{path_of("b", "Engine"), java_class("b", "Engine", stable + start)},
                   {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.expected = {"MoveClass|a.Engine|b.Engine",
                      "RenameMethod|a.Engine.ignite()|b.Engine.start()"};
        all.push_back(std::move(s));
    }

    {
        Scenario s;
        s.name = "copied_class_is_not_a_move";
        s.before = {{path_of("n", "Solo"), java_class("n", "Solo", foo_members)}};
        s.after = {{path_of("n", "Solo"), java_class("n", "Solo", foo_members)},
                   {path_of("o", "Solo"), java_class("o", "Solo", foo_members)}};
        s.expected = {};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "deleted_duplicate_is_not_a_move";
        s.before = {{path_of("n", "Solo"), java_class("n", "Solo", foo_members)},
                    {path_of("o", "Solo"), java_class("o", "Solo", foo_members)}};
        s.after = {{path_of("o", "Solo"), java_class("o", "Solo", foo_members)}};
        s.expected = {};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "whole_package_into_existing_target_is_plain_moves";
        s.before = {{path_of("pp", "One"), java_class("pp", "One", one_members)},
                    {path_of("pp", "Two"), java_class("pp", "Two", two_members)},
                    {path_of("qq", "Keep"), java_class("qq", "Keep", keep_members)}};
        s.after = {{path_of("qq", "One"), java_class("qq", "One", one_members)},
                   {path_of("qq", "Two"), java_class("qq", "Two", two_members)},
                   {path_of("qq", "Keep"), java_class("qq", "Keep", keep_members)}};
        s.expected = {"MoveClass|pp.One|qq.One", "MoveClass|pp.Two|qq.Two"};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "identical_snapshots";
        s.before = {{path_of("a", "Foo"), java_class("a", "Foo", foo_members)},
                    {path_of("a", "Keep"), java_class("a", "Keep", keep_members)}};
        s.after = s.before;
        s.expected = {};
        all.push_back(std::move(s));
    }
    {
        Scenario s;
        s.name = "equal_similarity_breaks_ties_by_name";
        const std::string shared_body = "        beacon = beacon ^ mask;\n";
        std::string before_members = "    public int ma() {\n" + shared_body + "    }\n\n" +
                                     "    public int mb() {\n" + shared_body + "    }\n";
        std::string after_members = "    public int mc() {\n" + shared_body + "    }\n";
        s.before = {{path_of("t", "Twin"), java_class("t", "Twin", before_members)}};
        s.after = {{path_of("t", "Twin"), java_class("t", "Twin", after_members)}};
        s.expected = {"RenameMethod|t.Twin.ma()|t.Twin.mc()"};
        all.push_back(std::move(s));
    }

    return all;
}

} // namespace planted
