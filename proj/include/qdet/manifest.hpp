#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qdet {

struct JobResult {
    int index = 0;
    std::string kind;
    std::string title;
    bool pass = false;
    std::string detail;               // diff or error text when failing
    std::vector<std::string> notes;   // golden normalizations applied
};

struct ManifestReport {
    std::vector<JobResult> results;

    bool all_pass() const;
    std::string text() const;  // one line per job, order-stable
};

// Runs the jobs of a manifest document, optionally on a thread pool.
ManifestReport run_manifest_json(const nlohmann::json& doc, int jobs = 1);
ManifestReport run_manifest(const std::string& path, int jobs = 1);

}  // namespace qdet
