#pragma once
// The bigraded Khovanov chain complex over a PD diagram: generators, the F2
// and signed integral differentials, between-sets, and the ladybug involution.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "khsq/cube.hpp"
#include "khsq/pd.hpp"
#include "khsq/resolve.hpp"

namespace khsq {

struct Generator {
  Vertex u = 0;
  std::uint32_t labels = 0; // bit k = circle k carries x_+
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const {
    return std::hash<std::uint64_t>()((std::uint64_t{g.u} << 32) | g.labels);
  }
};

struct Bigrading {
  int i = 0, j = 0;
  friend bool operator==(const Bigrading&, const Bigrading&) = default;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

// One term of the differential of a generator.
struct DiffTerm {
  Generator target;
  int sign_exp = 0; // s(C_{F(target),F(source)}): integral coefficient (-1)^s
};

class Complex {
public:
  explicit Complex(const Diagram& d);

  const Diagram& diagram() const { return d_; }
  const ResolutionConfig& resolution(Vertex u) const { return res_[u]; }

  Bigrading grading(const Generator& g) const;
  // Generators at a bigrading, canonically ordered (vertex, then labels).
  const std::vector<Generator>& generators(Bigrading ij) const;
  const std::map<Bigrading, std::vector<Generator>>& all_generators() const {
    return gens_;
  }
  // Position of g within its grading's canonical list.
  int position(const Generator& g) const;

  std::vector<DiffTerm> differential(const Generator& g) const;

  // Transfer labels of circles of res(v) (minus 'removed' mask) to res(w) by
  // min-edge identity; 'set_bits' adds labels for the new circles of w.
  std::uint32_t transfer(Vertex v, Vertex w, std::uint32_t labels,
                         std::uint32_t removed_mask,
                         std::uint32_t set_bits) const;

  // Between-set of x (two levels up) and y; size 0, 2 or 4.
  std::vector<Generator> between(const Generator& x, const Generator& y) const;
  // Fixed-point-free involution on between(x, y); the ladybug matching on
  // 4-element sets, the unique swap on 2-element sets. Pairs are returned as
  // (z, partner-of-z) for each element.
  std::vector<std::pair<Generator, Generator>>
  ladybug_involution(const Generator& x, const Generator& y) const;

private:
  Diagram d_;
  std::vector<ResolutionConfig> res_;
  std::map<Bigrading, std::vector<Generator>> gens_;
  std::unordered_map<Generator, int, GeneratorHash> pos_;
};

} // namespace khsq
