#pragma once

#include <span>
#include <string>
#include <vector>

#include "bast/approx.hpp"
#include "bast/io.hpp"
#include "bast/spanner.hpp"

namespace bast {

ResultFile make_alpha_result(std::span<const Point> points, const AlphaST& st, const AlphaReport& report);
ResultFile make_spanner_result(const SpannerResult& sp);
/// Result for an oracle run; `tree` absent means no alpha-ST exists.
ResultFile make_oracle_result(std::span<const Point> points, double alpha, const std::optional<SpanningTree>& tree);

struct VerifyOutcome {
  bool pass = false;
  std::vector<std::string> failures;
};

/// Re-checks a result file against its instance from scratch. Unknown
/// kinds fail.
VerifyOutcome verify_result(std::span<const Point> points, const ResultFile& result);

}  // namespace bast
