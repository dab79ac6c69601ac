#pragma once

#include <string>
#include <utility>
#include <vector>

namespace recmat::report {

/// Ordered key/value tree; the machine-readable report format.
struct KvNode {
    std::string value;
    std::vector<std::pair<std::string, KvNode>> children;

    KvNode& child(const std::string& key);
    void set(const std::string& key, std::string value);
};

std::string to_kv(const KvNode& root);
KvNode parse_kv(const std::string& text);

struct ReportItem {
    std::string input;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct RunReport {
    std::string command;
    std::vector<ReportItem> items;
    std::vector<std::string> certificates;
    double wall_seconds = 0.0;

    bool all_pass() const;
    std::size_t failures() const;
    /// First failing item, empty string when everything passed.
    std::string first_witness() const;

    KvNode to_kv_tree(bool include_timing) const;
    std::string to_text(bool include_timing) const;
};

}  // namespace recmat::report
