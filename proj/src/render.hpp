#pragma once

// Report rendering for the command-line surface: every command can emit
// json, markdown or pretty text, and the same inputs always produce the
// same bytes.

#include <string>
#include <vector>

namespace trig5::render {

std::vector<std::string> lemma_ids();
std::vector<std::string> table_ids();
std::vector<std::string> explain_ids();

std::string lemma_report(const std::string& id, const std::string& format);
std::string column_report(const std::string& id, const std::string& format);
std::string table_report(const std::string& id, const std::string& format);
// exit_ok is set to false when any embedded assertion fails
std::string pipeline_report(const std::string& format, bool* exit_ok);
std::string appendix_report(int config, const std::string& format);
std::string verify_report(const std::vector<std::string>& spaces, const std::vector<int>& qs,
                          const std::string& format, bool* all_match);
std::string explain_report(const std::string& id, const std::string& format);

}  // namespace trig5::render
