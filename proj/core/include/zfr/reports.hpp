#pragma once

// Report serialization (deterministic JSON), the append-only zero cache
// (one JSON record per line) and CSV export of region boundaries.

#include <string>
#include <vector>

#include "zfr/dlvp.hpp"
#include "zfr/jsonwriter.hpp"
#include "zfr/lfunction.hpp"
#include "zfr/scanner.hpp"

namespace zfr {

Json to_json(const ValidationReport& rep);
Json to_json(const DlvpReport& rep);
Json to_json(const ZeroRecord& rec);
Json to_json(const CertificationReport& rep);

std::string verdict_name(Verdict v);
std::string branch_name(BetaBranch b);

// {"instance", "beta", "gamma", "multiplicity", "refine_error"} per line.
std::string zero_cache_line(const std::string& instance, const ZeroRecord& rec);
void append_zero_cache(const std::string& path, const std::string& instance,
                       const std::vector<ZeroRecord>& records);

// Records cached for one instance; a missing file reads as empty.
std::vector<ZeroRecord> read_zero_cache(const std::string& path, const std::string& instance);

// t, boundary_sigma, nearest_zero_beta rows for plotting.
std::string boundary_csv(const LFunctionInstance& f, double c, double t_max, double t_step,
                         const std::vector<ZeroRecord>& zeros);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace zfr
