#include "recmat/report.hpp"

#include <sstream>

#include "recmat/errors.hpp"

namespace recmat::report {

KvNode& KvNode::child(const std::string& key) {
    for (auto& [k, v] : children)
        if (k == key) return v;
    children.emplace_back(key, KvNode{});
    return children.back().second;
}

void KvNode::set(const std::string& key, std::string value) {
    child(key).value = std::move(value);
}

namespace {

void emit(const KvNode& node, const std::string& key, int depth, std::ostringstream& os) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << key << ":";
    if (!node.value.empty()) os << " " << node.value;
    os << "\n";
    for (const auto& [k, v] : node.children) emit(v, k, depth + 1, os);
}

}  // namespace

std::string to_kv(const KvNode& root) {
    std::ostringstream os;
    for (const auto& [k, v] : root.children) emit(v, k, 0, os);
    return os.str();
}

KvNode parse_kv(const std::string& text) {
    KvNode root;
    std::vector<KvNode*> stack{&root};
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t indent = 0;
        while (indent < line.size() && line[indent] == ' ') ++indent;
        if (indent % 2 != 0) throw ParseError("odd indentation in kv document", lineno);
        std::size_t depth = indent / 2;
        if (depth + 1 > stack.size()) throw ParseError("kv indentation jump", lineno);
        auto colon = line.find(':', indent);
        if (colon == std::string::npos) throw ParseError("missing ':' in kv line", lineno);
        std::string key = line.substr(indent, colon - indent);
        std::string value = colon + 1 < line.size() ? line.substr(colon + 2) : "";
        stack.resize(depth + 1);
        KvNode& node = stack.back()->child(key);
        node.value = value;
        stack.push_back(&node);
    }
    return root;
}

bool RunReport::all_pass() const { return failures() == 0; }

std::size_t RunReport::failures() const {
    std::size_t n = 0;
    for (const auto& i : items)
        if (!i.pass) ++n;
    return n;
}

std::string RunReport::first_witness() const {
    for (const auto& i : items)
        if (!i.pass)
            return i.input + ": expected " + i.expected + ", computed " + i.computed;
    return "";
}

KvNode RunReport::to_kv_tree(bool include_timing) const {
    KvNode root;
    root.set("command", command);
    root.set("items", std::to_string(items.size()));
    root.set("failures", std::to_string(failures()));
    KvNode& it = root.child("results");
    for (std::size_t k = 0; k < items.size(); ++k) {
        KvNode& n = it.child("item" + std::to_string(k));
        n.set("input", items[k].input);
        n.set("expected", items[k].expected);
        n.set("computed", items[k].computed);
        n.set("pass", items[k].pass ? "true" : "false");
    }
    if (!certificates.empty()) {
        KvNode& c = root.child("certificates");
        for (std::size_t k = 0; k < certificates.size(); ++k)
            c.set("cert" + std::to_string(k), certificates[k]);
    }
    if (include_timing) root.set("wall_seconds", std::to_string(wall_seconds));
    return root;
}

std::string RunReport::to_text(bool include_timing) const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& i : items)
        os << (i.pass ? "  pass  " : "  FAIL  ") << i.input << "  expected=" << i.expected
           << "  computed=" << i.computed << "\n";
    for (const auto& c : certificates) os << "  certificate: " << c << "\n";
    os << (all_pass() ? "all pass" : std::to_string(failures()) + " failure(s)") << " ("
       << items.size() << " item" << (items.size() == 1 ? "" : "s") << ")";
    if (include_timing) os << "  [" << wall_seconds << " s]";
    os << "\n";
    return os.str();
}

}  // namespace recmat::report
