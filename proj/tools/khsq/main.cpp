// khsq: Khovanov homology, Steenrod squares, and stable homotopy types of
// width-3 links, from PD codes.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khsq/golden.hpp"
#include "khsq/jones.hpp"
#include "khsq/report.hpp"

namespace {

using namespace khsq;

struct CommonFlags {
  bool json = false, table = false;
  bool kh_only = false, sq = false, homotopy = false;
  int threads = 0;
  int matching_seeds = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "emit JSON");
  cmd->add_flag("--table", f.table, "emit a human-readable table (default)");
  cmd->add_flag("--kh-only", f.kh_only, "stop after integral homology");
  cmd->add_flag("--sq", f.sq, "compute Sq maps and St (default)");
  cmd->add_flag("--homotopy", f.homotopy, "classify stable homotopy types");
  cmd->add_option("--threads", f.threads,
                  "worker threads (default: KHSQ_THREADS or hardware)");
  cmd->add_option("--matching-seeds", f.matching_seeds,
                  "verify Sq maps across K extra matching seeds");
}

ComputeOptions to_options(const CommonFlags& f) {
  ComputeOptions o;
  o.with_sq = !f.kh_only;
  o.with_homotopy = f.homotopy && !f.kh_only;
  o.threads = f.threads;
  o.seed_sweep = f.matching_seeds;
  return o;
}

void emit(const ComputationReport& rep, const CommonFlags& f) {
  if (f.json)
    std::cout << report_json(rep);
  else
    std::cout << report_table(rep);
}

int cmd_compute(const std::string& pd, const CommonFlags& f) {
  try {
    Diagram d(parse_pd(pd));
    emit(compute_report("link", d, to_options(f)), f);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_corpus(const std::string& path, const CommonFlags& f) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  int failures = 0;
  std::vector<StValue> st_summary;
  std::vector<std::string> st_ids;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string id;
    if (!(ls >> id) || id[0] == '#') continue;
    std::string pd;
    std::getline(ls, pd);
    try {
      Diagram d(parse_pd(pd));
      ComputationReport rep = compute_report(id, d, to_options(f));
      emit(rep, f);
      for (auto& v : rep.st) {
        st_summary.push_back(v);
        st_ids.push_back(id);
      }
    } catch (const std::exception& e) {
      std::cerr << id << ": error: " << e.what() << "\n";
      ++failures;
    }
  }
  if (!f.json && !st_summary.empty()) {
    std::cout << "\nNonzero St values:\n";
    for (std::size_t k = 0; k < st_summary.size(); ++k) {
      auto& v = st_summary[k];
      std::cout << "  " << st_ids[k] << "  St(" << v.i << ", " << v.j
                << ") = (" << v.t[0] << ", " << v.t[1] << ", " << v.t[2]
                << ", " << v.t[3] << ")\n";
    }
  }
  return failures ? 2 : 0;
}

#define ST_CHECK(cond, msg)                                   \
  do {                                                        \
    if (!(cond)) {                                            \
      std::cerr << "selftest FAILED: " << (msg) << "\n";      \
      return false;                                           \
    }                                                         \
  } while (0)

bool selftest_cube(int n_max) {
  for (int n = 2; n <= n_max; ++n) {
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) {
      // delta s = 1_2 on every 2-face above v
      for (int i = 0; i < n; ++i) {
        if ((v >> i) & 1) continue;
        for (int j = i + 1; j < n; ++j) {
          if ((v >> j) & 1) continue;
          Vertex vi = v | (Vertex{1} << i), vj = v | (Vertex{1} << j);
          Vertex u = vi | vj;
          int tot = sign_s(v, vi) + sign_s(vi, u) + sign_s(v, vj) +
                    sign_s(vj, u);
          ST_CHECK(tot % 2 == 1, "delta s != 1_2");
          // frame-sum on every 3-face above v
          for (int k = j + 1; k < n; ++k) {
            if ((v >> k) & 1) continue;
            Vertex w = u | (Vertex{1} << k);
            // six 2-faces of the 3-cell C_{w,v}
            int df = frame_f(v, v | (Vertex{1} << i) | (Vertex{1} << j)) +
                 frame_f(v, v | (Vertex{1} << i) | (Vertex{1} << k)) +
                 frame_f(v, v | (Vertex{1} << j) | (Vertex{1} << k)) +
                 frame_f(v | (Vertex{1} << i), w) +
                 frame_f(v | (Vertex{1} << j), w) +
                 frame_f(v | (Vertex{1} << k), w);
            int ssum = sign_s(v, v | (Vertex{1} << i)) +
                       sign_s(v, v | (Vertex{1} << j)) +
                       sign_s(v, v | (Vertex{1} << k));
            ST_CHECK((df & 1) == (ssum & 1), "frame-sum identity");
          }
        }
      }
    }
  }
  return true;
}

bool selftest_golden() {
  SquareInput in = golden_square_input();
  BitVec c = golden_cycle();
  BoundaryMatching m = golden_matching();
  BitVec s1 = sq1_chain(in, c, m);
  BitVec want1(6);
  want1.flip(0);
  want1.flip(2);
  want1.flip(5);
  ST_CHECK(s1 == want1, "golden sq1 != z1+z3+z6");
  GraphCounts g0 = graph_counts(build_graph(in, c, m, 0));
  ST_CHECK(g0.components == 1 && g0.f_count == 1 && g0.g_count == 1,
           "golden x1 graph counts");
  GraphCounts g1 = graph_counts(build_graph(in, c, m, 1));
  ST_CHECK(g1.components == 2 && g1.f_count == 1 && g1.g_count == 1,
           "golden x2 graph counts");
  BitVec s2 = sq2_chain(in, c, m);
  BitVec want2(2);
  want2.flip(0);
  ST_CHECK(s2 == want2, "golden sq2 != x1");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BoundaryMatching ms = make_boundary_matching(in, c, seed);
    BitVec t1 = sq1_chain(in, c, ms);
    // cycle check: dBC(t1) = 0 over F2
    std::vector<int> img(in.nC, 0);
    for (int z = 0; z < in.nB; ++z)
      if (t1.get(z))
        for (auto& [x, s] : in.dBC[z]) img[x] ^= 1;
    for (int x = 0; x < in.nC; ++x) ST_CHECK(img[x] == 0, "sq1 not a cycle");
    sq2_chain(in, c, ms); // validates graph invariants internally
  }
  return true;
}

bool selftest_small() {
  const char* pds[] = {
      "X(1,2,2,1)",                                  // kinked unknot
      "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",            // right trefoil
      "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",            // left trefoil
      "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", // figure-eight
  };
  for (const char* pd : pds) {
    Diagram d(parse_pd(pd));
    Complex cx(d);
    // delta^2 = 0 over Z (and hence F2)
    for (auto& [ij, gens] : cx.all_generators())
      for (auto& g : gens) {
        std::map<Generator, int> second;
        for (auto& t1 : cx.differential(g))
          for (auto& t2 : cx.differential(t1.target))
            second[t2.target] +=
                ((t1.sign_exp + t2.sign_exp) & 1) ? -1 : 1;
        for (auto& [tg, coeff] : second)
          ST_CHECK(coeff == 0, "delta squared != 0");
      }
    auto kh = kh_z(cx);
    ST_CHECK(euler_characteristic(kh) == jones_state_sum(d),
             "Euler characteristic != Jones state sum");
    std::set<int> js;
    for (auto& [ij, g] : cx.all_generators()) js.insert(ij.j);
    for (int j : js) {
      SqMaps base = sq_maps(cx, j, 0);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SqMaps other = sq_maps(cx, j, seed);
        ST_CHECK(base.size() == other.size(), "Sq level sets differ");
        for (auto& [i, lvl] : base) {
          ST_CHECK(other.at(i).sq1 == lvl.sq1, "Sq1 depends on seed");
          ST_CHECK(other.at(i).sq2 == lvl.sq2, "Sq2 depends on seed");
        }
      }
    }
  }
  return true;
}

int cmd_selftest(int n_max) {
  bool ok = selftest_cube(n_max) && selftest_golden() && selftest_small();
  std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology, Steenrod squares, and stable homotopy "
               "types from PD codes"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute invariants of one link");
  std::string pd;
  compute->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) ...\"")
      ->required();
  CommonFlags cf;
  add_common(compute, cf);

  auto* corpus = app.add_subcommand("corpus", "compute a corpus file");
  std::string corpus_file;
  corpus->add_option("file", corpus_file, "lines of: link_id PD")->required();
  CommonFlags of;
  add_common(corpus, of);

  auto* selftest = app.add_subcommand("selftest", "run built-in validations");
  int n_max = 8;
  selftest->add_option("--n-max", n_max, "cube identity exhaustion bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (compute->parsed()) return cmd_compute(pd, cf);
  if (corpus->parsed()) return cmd_corpus(corpus_file, of);
  if (selftest->parsed()) return cmd_selftest(n_max);
  return 1;
}
