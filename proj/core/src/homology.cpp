#include "khsq/homology.hpp"

#include <cassert>
#include <stdexcept>

namespace khsq {

BitMatrix f2_boundary(const Complex& c, Bigrading from) {
  const auto& src = c.generators(from);
  const auto& dst = c.generators({from.i + 1, from.j});
  BitMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (int col = 0; col < static_cast<int>(src.size()); ++col)
    for (const auto& t : c.differential(src[col]))
      m.col(col).flip(c.position(t.target));
  return m;
}

SparseInt z_boundary(const Complex& c, Bigrading from) {
  const auto& src = c.generators(from);
  const auto& dst = c.generators({from.i + 1, from.j});
  SparseInt m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (int col = 0; col < static_cast<int>(src.size()); ++col)
    for (const auto& t : c.differential(src[col]))
      m.add(c.position(t.target), col, (t.sign_exp & 1) ? -1 : 1);
  return m;
}

std::map<Bigrading, KhGroup> kh_z(const Complex& c) {
  std::map<Bigrading, std::vector<std::int64_t>> factors; // of d out of ij
  for (const auto& [ij, gens] : c.all_generators())
    factors[ij] = smith_invariant_factors(z_boundary(c, ij));
  std::map<Bigrading, KhGroup> out;
  for (const auto& [ij, gens] : c.all_generators()) {
    int dim = static_cast<int>(gens.size());
    int rank_out = static_cast<int>(factors[ij].size());
    KhGroup g;
    g.free = dim - rank_out;
    auto in = factors.find({ij.i - 1, ij.j});
    if (in != factors.end()) {
      g.free -= static_cast<int>(in->second.size());
      for (auto f : in->second)
        if (f > 1) g.torsion.push_back(f);
    }
    if (!g.trivial()) out[ij] = g;
  }
  return out;
}

F2Homology::F2Homology(const Complex& c, Bigrading ij)
    : ij_(ij),
      chain_dim_(static_cast<int>(c.generators(ij).size())),
      d_out_(f2_boundary(c, ij)),
      span_(std::make_unique<Span>(chain_dim_)) {
  BitMatrix d_in = f2_boundary(c, {ij.i - 1, ij.j});
  for (int j = 0; j < d_in.cols(); ++j) span_->insert(d_in.col(j), false);
  for (const auto& k : d_out_.kernel())
    if (span_->insert(k, true)) reps_.push_back(k);
}

bool F2Homology::is_cycle(const BitVec& chain) const {
  return !d_out_.apply(chain).any();
}

BitVec F2Homology::project(const BitVec& cycle) const {
  assert(is_cycle(cycle));
  return span_->coordinates(cycle);
}

BitVec bockstein(const Complex& c, const F2Homology& from, const F2Homology& to,
                 const BitVec& cycle) {
  Bigrading ij = from.grading();
  const auto& src = c.generators(ij);
  const auto& dst = c.generators({ij.i + 1, ij.j});
  std::vector<std::int64_t> image(dst.size(), 0);
  for (int col = 0; col < static_cast<int>(src.size()); ++col) {
    if (!cycle.get(col)) continue;
    for (const auto& t : c.differential(src[col]))
      image[c.position(t.target)] += (t.sign_exp & 1) ? -1 : 1;
  }
  BitVec half(static_cast<int>(dst.size()));
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] & 1) throw std::logic_error("Bockstein lift not a mod-2 cycle");
    if ((image[k] / 2) & 1) half.flip(static_cast<int>(k));
  }
  return to.project(half);
}

} // namespace khsq
