#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gq/errors.hpp"

namespace gq {

using Elt = uint32_t;
inline constexpr Elt kNoElt = UINT32_MAX;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { zmod, gf, gauss_mod, poly_quot, derived };
enum class Involution { trivial, conj };

// A finite commutative ring with involution and a fixed lambda (lambda * conj(lambda) = 1).
// Elements are dense indices 0..size-1 with one canonical representative each; all
// operations are table lookups. Immutable after construction.
class Ring {
 public:
  // Full spec grammar:
  //   Zmod <n> | GF <p> | GaussMod <n> | PolyQuot <base kind> <n> <monic poly>
  // followed by ", trivial|conj, lambda=<int or a+bi>".
  static RingPtr make(const std::string& spec);

  uint32_t size() const { return size_; }
  RingKind kind() const { return kind_; }
  Involution involution() const { return inv_kind_; }
  int dim() const { return 0; }  // declared Krull dimension; finite rings only

  Elt zero() const { return zero_; }
  Elt one() const { return one_; }
  Elt lambda() const { return lambda_; }
  Elt lambda_bar() const { return conj_[lambda_]; }

  Elt add(Elt a, Elt b) const { return add_[size_t(a) * size_ + b]; }
  Elt mul(Elt a, Elt b) const { return mul_[size_t(a) * size_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt conj(Elt a) const { return conj_[a]; }
  bool is_unit(Elt a) const { return unit_[a] != 0; }
  Elt inverse_or_npos(Elt a) const { return inv_[a]; }
  std::optional<Elt> inverse(Elt a) const {
    return inv_[a] == kNoElt ? std::nullopt : std::optional<Elt>(inv_[a]);
  }
  Elt pow(Elt a, uint64_t k) const;
  Elt from_int(long long v) const;

  const std::string& spec() const { return spec_; }

  std::string elt_str(Elt a) const;
  nlohmann::json elt_json(Elt a) const;
  Elt elt_from_json(const nlohmann::json& j) const;

  // All elements x with x * conj(x) == 1 (admissible lambdas), in index order.
  std::vector<Elt> norm_one_elements() const;

  bool same_ring(const Ring& other) const { return this == &other; }

  // Derived-ring construction: target elements are the given source representatives,
  // ops induced through `to_target` (a surjective hom source -> target indices).
  // Verified exhaustively. Used by localization and residue quotients.
  static RingPtr derive(const RingPtr& source, const std::vector<Elt>& reps,
                        const std::vector<Elt>& to_target, const std::string& name,
                        bool require_involution = true);

  // Derived rings only: representative in the source ring, and the source ring itself.
  const std::vector<Elt>& derived_reps() const { return reps_; }
  RingPtr derived_source() const { return source_; }

 private:
  Ring() = default;
  void build_unit_table();
  void verify_invariants() const;

  RingKind kind_ = RingKind::zmod;
  Involution inv_kind_ = Involution::trivial;
  uint32_t size_ = 0;
  std::vector<Elt> add_, mul_;
  std::vector<Elt> neg_, conj_, inv_;
  std::vector<uint8_t> unit_;
  Elt zero_ = 0, one_ = 0, lambda_ = 0;
  std::string spec_;

  // representation data
  uint32_t zmod_n_ = 0;                   // zmod/gf
  uint32_t gauss_n_ = 0;                  // gauss_mod: idx = a + b*n
  RingPtr base_;                          // poly_quot: coefficient ring
  std::vector<Elt> modulus_;              // poly_quot: monic modulus, degree = modulus_.size()-1
  RingPtr source_;                        // derived
  std::vector<Elt> reps_;                 // derived: target idx -> source element

  friend RingPtr make_ring_impl(const std::string&);
};

// ---- ideals ----

class Ideal {
 public:
  static Ideal from_gens(const RingPtr& R, const std::vector<Elt>& gens);
  // (s^l); l = 0 gives the unit ideal
  static Ideal principal_power(const RingPtr& R, Elt s, uint32_t l);
  static Ideal zero(const RingPtr& R);
  static Ideal full(const RingPtr& R);

  const RingPtr& ring() const { return R_; }
  const std::vector<Elt>& gens() const { return gens_; }
  const std::vector<Elt>& elements() const { return elems_; }
  bool contains(Elt x) const { return member_[x] != 0; }
  size_t count() const { return elems_.size(); }
  bool is_full() const { return elems_.size() == R_->size(); }
  bool is_zero() const { return elems_.size() == 1; }
  bool operator==(const Ideal& o) const { return member_ == o.member_; }

 private:
  RingPtr R_;
  std::vector<Elt> gens_;
  std::vector<uint8_t> member_;
  std::vector<Elt> elems_;  // sorted by index
};

// ---- localization ----

// Localization of a finite commutative ring at a non-nilpotent s, realized as the
// idempotent quotient R -> R e, (s^k) = (s^{k+1}) = (e). Kernel is {a : s^k a = 0}.
struct Localization {
  RingPtr source;
  RingPtr target;
  std::vector<Elt> map;  // source elt -> target elt
  Elt s = 0;             // inverted element
  Elt e = 0;             // stable idempotent (in source)
  uint32_t k = 0;        // stabilization exponent

  Elt operator()(Elt x) const { return map[x]; }
  // least source element mapping to y
  Elt preimage(Elt y) const;
};

Localization localize_at(const RingPtr& R, Elt s);

// identity "localization" (s = 1); handy for uniform pipelines
Localization identity_localization(const RingPtr& R);

// ---- maximal ideals / partition of unity ----

struct MaximalIdeal {
  Ideal ideal;
  RingPtr residue;              // residue field R/m
  std::vector<Elt> surjection;  // source elt -> residue elt
};

std::vector<MaximalIdeal> maximal_ideals(const RingPtr& R);

struct PartitionOfUnity {
  std::vector<Elt> b;        // b_i in (s_i^l), sum = 1
  std::vector<Elt> witness;  // c_i with b_i = s_i^l * c_i
  uint32_t l = 0;
};

PartitionOfUnity partition_of_unity(const RingPtr& R, const std::vector<Elt>& s_list,
                                    uint32_t l);

}  // namespace gq
