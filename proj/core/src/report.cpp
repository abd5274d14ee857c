#include "khsq/report.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace khsq {

namespace {

using json = nlohmann::ordered_json;

void run_parallel(std::vector<std::function<void()>>& tasks, int threads) {
  if (threads <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mtx;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      try {
        tasks[k]();
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int nt = std::min<int>(threads, static_cast<int>(tasks.size()));
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

bool same_maps(const SqMaps& a, const SqMaps& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.sq1 != ib->second.sq1) return false;
    if (ia->second.sq2 != ib->second.sq2) return false;
  }
  return true;
}

// Assemble the per-j Sq^k matrix over the whole column Kh^{*,j}: basis
// classes concatenated over ascending i index both rows and columns.
std::vector<std::vector<int>> column_matrix(const SqMaps& m, int shift) {
  std::map<int, int> offset;
  int total = 0;
  std::set<int> levels;
  for (auto& [i, lvl] : m) {
    levels.insert(i);
    levels.insert(i + 1);
    levels.insert(i + 2);
  }
  std::map<int, int> dims;
  for (auto& [i, lvl] : m) {
    dims[i] = lvl.dimA;
    dims[i + 1] = lvl.dimB;
    dims[i + 2] = lvl.dimC;
  }
  for (int i : levels) {
    offset[i] = total;
    total += dims[i];
  }
  std::vector<std::vector<int>> rows(total, std::vector<int>(total, 0));
  for (auto& [i, lvl] : m) {
    const auto& cols = (shift == 1) ? lvl.sq1 : lvl.sq2;
    int roff = offset.at(i + shift);
    int coff = offset.at(i);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      for (int r = 0; r < cols[c].size(); ++r)
        if (cols[c].get(r)) rows[roff + r][coff + c] = 1;
  }
  return rows;
}

} // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KHSQ_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

ComputationReport compute_report(const std::string& link_id, const Diagram& d,
                                 const ComputeOptions& opt) {
  ComputationReport rep;
  rep.link_id = link_id;
  rep.n = d.n();
  rep.n_minus = d.n_minus();
  Complex cx(d);
  rep.kh = kh_z(cx);
  if (!opt.with_sq && !opt.with_homotopy) return rep;

  std::set<int> js;
  for (auto& [ij, g] : cx.all_generators()) js.insert(ij.j);
  std::vector<int> jlist(js.begin(), js.end());
  std::vector<SqMaps> per_j(jlist.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t k = 0; k < jlist.size(); ++k)
    tasks.push_back([&, k] {
      per_j[k] = sq_maps(cx, jlist[k], opt.matching_seed);
      for (int s = 1; s <= opt.seed_sweep; ++s)
        if (!same_maps(per_j[k], sq_maps(cx, jlist[k], opt.matching_seed + s)))
          throw std::logic_error("Sq maps depend on the matching seed");
    });
  run_parallel(tasks, resolve_threads(opt.threads));
  for (std::size_t k = 0; k < jlist.size(); ++k)
    rep.sq[jlist[k]] = std::move(per_j[k]);

  for (auto& [j, m] : rep.sq)
    for (auto& [i, lvl] : m) {
      auto t = st_invariant(m, i);
      if (t != std::array<int, 4>{0, 0, 0, 0}) rep.st.push_back({i, j, t});
    }

  if (opt.with_homotopy) {
    rep.gate = check_width3(rep.kh);
    if (rep.gate.ok)
      for (int j : jlist) {
        WedgeExpr w = homotopy_type(rep.kh, rep.sq.at(j), j, rep.gate.sigma);
        if (!w.summands.empty()) rep.homotopy[j] = std::move(w);
      }
  }
  return rep;
}

std::string report_json(const ComputationReport& r) {
  json out;
  out["link_id"] = r.link_id;
  out["n"] = r.n;
  out["n_minus"] = r.n_minus;
  out["kh"] = json::array();
  for (auto& [ij, g] : r.kh)
    out["kh"].push_back(
        {{"i", ij.i}, {"j", ij.j}, {"free", g.free}, {"torsion", g.torsion}});
  out["sq1"] = json::array();
  out["sq2"] = json::array();
  for (auto& [j, m] : r.sq) {
    auto m1 = column_matrix(m, 1);
    auto m2 = column_matrix(m, 2);
    if (!m1.empty()) out["sq1"].push_back({{"j", j}, {"matrix", m1}});
    if (!m2.empty()) out["sq2"].push_back({{"j", j}, {"matrix", m2}});
  }
  out["st"] = json::array();
  for (auto& v : r.st)
    out["st"].push_back({{"i", v.i}, {"j", v.j}, {"t", v.t}});
  out["homotopy"] = json::array();
  for (auto& [j, w] : r.homotopy) {
    json parts = json::array();
    for (auto& s : w.summands) parts.push_back(summand_text(s));
    out["homotopy"].push_back({{"j", j}, {"wedge", parts}});
  }
  return out.dump(2) + "\n";
}

std::string report_table(const ComputationReport& r) {
  std::ostringstream os;
  os << r.link_id << ": n=" << r.n << " n_minus=" << r.n_minus << "\n";
  os << "Kh_Z (i, j, group):\n";
  for (auto& [ij, g] : r.kh) {
    os << "  (" << ij.i << ", " << ij.j << ")  ";
    bool first = true;
    for (int k = 0; k < g.free; ++k) {
      os << (first ? "" : " + ") << "Z";
      first = false;
    }
    for (auto t : g.torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    os << "\n";
  }
  if (!r.st.empty()) {
    os << "St (nonzero):\n";
    for (auto& v : r.st)
      os << "  St(" << v.i << ", " << v.j << ") = (" << v.t[0] << ", "
         << v.t[1] << ", " << v.t[2] << ", " << v.t[3] << ")\n";
  }
  if (!r.homotopy.empty()) {
    os << "Homotopy types:\n";
    for (auto& [j, w] : r.homotopy)
      os << "  j=" << j << ":  " << w.text() << "\n";
  } else if (!r.gate.failure.empty()) {
    os << "width-3 gate: " << r.gate.failure << "\n";
  }
  return os.str();
}

} // namespace khsq
