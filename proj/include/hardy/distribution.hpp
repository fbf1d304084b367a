#pragma once

#include <cstdint>
#include <vector>

namespace hardy {

struct Atom {
  double x = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Uniform mass on [lo, hi].
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;

  double density() const { return mass / (hi - lo); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Side { right, left };

/// One support component in ascending order, with the mass that precedes it.
struct Component {
  enum class Kind { atom, segment };
  Kind kind = Kind::atom;
  double lo = 0.0;  // atom location for atoms
  double hi = 0.0;
  double mass = 0.0;
  double mass_before = 0.0;
};

/// Mixed probability law: finitely many atoms plus finitely many segments of
/// uniform density. Components never overlap; an atom may sit on a segment
/// endpoint.
///
/// Masses are validated to sum to 1 within 1e-9 and then renormalised, so the
/// stored total is 1 to rounding.
class Distribution {
 public:
  Distribution(std::vector<Atom> atoms, std::vector<Segment> segments);

  static Distribution uniform(double lo, double hi);
  static Distribution point_mass(double x);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Component>& components() const { return components_; }

  bool is_atomic() const { return segments_.empty(); }
  bool is_continuous() const { return atoms_.empty(); }

  double support_min() const { return components_.front().lo; }
  double support_max() const { return components_.back().hi; }

  /// F(x) for Side::right, F(x-) for Side::left.
  double cdf(double x, Side side = Side::right) const;

  /// Left-continuous inverse inf{x : F(x) >= u}; u must lie in (0, 1].
  double quantile(double u) const;

  /// Inverse-transform draws, deterministic in (seed, n).
  std::vector<double> sample(std::uint64_t seed, std::size_t n) const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.atoms_ == b.atoms_ && a.segments_ == b.segments_;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<Segment> segments_;
  std::vector<Component> components_;
  std::vector<double> atom_cum_;     // atom_cum_[i] = mass of atoms_[0..i)
  std::vector<double> segment_cum_;  // likewise for segments
};

/// Uniform (0,1) variate from one 64-bit draw; never returns 0 or 1.
inline double unit_from_bits(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace hardy
