#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/linking_graph.hpp"

namespace braidtk {

// Integer Laurent polynomial in t^(1/2); exponents are stored doubled so that
// knot polynomials use even keys. Kept normalized (no zero coefficients).
class Laurent {
  public:
    Laurent() = default;
    static Laurent monomial(long long coeff, int half_exponent);

    void add_term(long long coeff, int half_exponent);
    bool is_zero() const { return terms_.empty(); }
    long long coeff(int half_exponent) const;
    const std::map<int, long long>& terms() const { return terms_; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const = default;

    // Exact division; throws PreconditionError when the remainder is nonzero.
    Laurent divide_exact(const Laurent& d) const;

    long long evaluate_at_one() const;
    long long evaluate_at_minus_one() const;  // t^(1/2) = i convention not needed; see impl
    Laurent mirrored() const;                 // t -> 1/t
    Laurent shifted(int half_exponent) const;

    std::string str() const;  // human form, e.g. "t^2 - t + 1 - t^-1 + t^-2"

  private:
    std::map<int, long long> terms_;  // half-exponent -> coefficient
};

// Seifert form data in the brick basis (deterministic column-major order).
struct SeifertData {
    std::vector<std::vector<long long>> matrix;      // S
    std::vector<std::vector<long long>> intersection;  // J = S - S^T
    int size() const { return static_cast<int>(matrix.size()); }
};

// Seifert matrix of the fibre surface in the brick-curve basis. Requires a
// non-split word. Validated convention: S(g,g) = -1; for an edge u < v in the
// deterministic order, S[u][v] = 1, S[v][u] = 0.
SeifertData seifert_matrix(const BraidWord& w);

// det(t^(1/2) S - t^(-1/2) S^T), symmetrically normalized with positive
// leading coefficient; Delta(1) = 1 for knots.
Laurent alexander_polynomial(const SeifertData& sd);

// |det(S + S^T)| — the determinant of the closure.
long long link_determinant(const SeifertData& sd);

// Arf invariant via a symplectic basis of the mod-2 intersection form and the
// quadratic refinement q(x) = x S x mod 2. Requires a knot closure.
int arf_invariant(const SeifertData& sd);

// Independent route: 0 iff |det(S + S^T)| = +-1 mod 8.
int arf_via_determinant(const SeifertData& sd);

// Twist-linearity: value of the winding function after a Dehn twist.
long long twist_update(long long phi_x, long long algebraic_intersection, long long phi_a);

// Homological transvection x + <x,a> a with respect to the intersection form.
std::vector<long long> twist_homology(const std::vector<long long>& x,
                                      const std::vector<long long>& a,
                                      const std::vector<std::vector<long long>>& J);

long long intersection_pairing(const std::vector<long long>& x, const std::vector<long long>& y,
                               const std::vector<std::vector<long long>>& J);

// GF(2) quadratic refinement q(x) = x S x mod 2.
int quadratic_value(const SeifertData& sd, const std::vector<long long>& x);

// Winding numbers pinned to 0 on every brick curve and extended only along
// explicitly recorded twist orbits.
class WindingAssignment {
  public:
    explicit WindingAssignment(const SeifertData& sd) : sd_(&sd) {}

    // phi of a basis curve is 0 by construction.
    long long basis_value(int) const { return 0; }

    struct Tracked {
        std::vector<long long> cls;
        long long phi = 0;
    };

    Tracked basis_curve(int i) const;
    // Applies T_a to a tracked curve; a must itself be tracked (so phi(a) is known).
    Tracked twist(const Tracked& x, const Tracked& a) const;

  private:
    const SeifertData* sd_;
};

}  // namespace braidtk
