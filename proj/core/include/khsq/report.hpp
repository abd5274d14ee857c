#pragma once
// Full pipeline for one link: Kh_Z, Sq maps, St values, homotopy types,
// and JSON/table serialization of the result.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "khsq/homotopy.hpp"
#include "khsq/pd.hpp"
#include "khsq/steenrod.hpp"

namespace khsq {

struct ComputeOptions {
  bool with_sq = true;
  bool with_homotopy = false;
  int threads = 0;               // 0: KHSQ_THREADS env, else hardware
  std::uint64_t matching_seed = 0;
  int seed_sweep = 0;            // also check seeds 1..K give the same maps
};

struct StValue {
  int i, j;
  std::array<int, 4> t;
};

struct ComputationReport {
  std::string link_id;
  int n = 0, n_minus = 0;
  std::map<Bigrading, KhGroup> kh;
  std::map<int, SqMaps> sq;          // quantum grading -> maps
  std::vector<StValue> st;           // nonzero tuples only
  Width3Report gate;
  std::map<int, WedgeExpr> homotopy; // present when gate passed
};

int resolve_threads(int requested);

ComputationReport compute_report(const std::string& link_id, const Diagram& d,
                                 const ComputeOptions& opt);

std::string report_json(const ComputationReport& r); // canonical, 2-space indent
std::string report_table(const ComputationReport& r);

} // namespace khsq
