#pragma once

#include <map>
#include <string>
#include <vector>

#include "tkk/linalg.hpp"

namespace tkk {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

/// A simple type such as "E7": family plus rank.
struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;
    /// Dimension of the split simple Lie algebra of this type.
    std::size_t algebra_dim() const;
    /// Number of roots.
    std::size_t root_count() const;
    /// Dual Coxeter number from the classification table.
    int dual_coxeter_table() const;
    /// Parses names such as "E7", "c2", "D4"; throws std::invalid_argument for invalid types.
    static SimpleType parse(const std::string& text);
    /// Throws std::invalid_argument unless (family, rank) is a buildable type with rank <= 8.
    void validate() const;

    friend bool operator==(const SimpleType& a, const SimpleType& b) { return a.family == b.family && a.rank == b.rank; }
    friend bool operator!=(const SimpleType& a, const SimpleType& b) { return !(a == b); }
};

/// All buildable types of rank at most 8, in family then rank order.
std::vector<SimpleType> all_simple_types();

/// Highest weight in fundamental-weight (Dynkin label) coordinates.
struct Weight {
    std::vector<long long> coords;
    bool dominant() const;
};

/// Reduced irreducible root system in a Euclidean coordinate model.
///
/// Simple roots follow the Bourbaki numbering. Positive roots are listed by
/// height, ties broken by decreasing lexicographic order of their coefficient
/// vectors, so the simple roots come first in node order.
struct RootSystem {
    SimpleType type;
    std::size_t rank = 0;
    std::size_t ambient = 0;                           ///< Euclidean dimension of the model
    std::vector<Vector> simple_roots;                  ///< Euclidean vectors
    std::vector<std::vector<int>> positive_coeffs;     ///< coefficients in simple roots
    std::vector<Vector> positive_roots;                ///< Euclidean vectors
    std::vector<std::vector<int>> cartan;              ///< cartan[i][j] = <alpha_i, alpha_j^vee>
    Vector weyl_vector;                                ///< rho
    Vector highest_root;                               ///< theta
    std::vector<int> highest_coeffs;
    std::vector<Vector> fundamental_weights;
    Rational scale;                                    ///< normalized product = scale * Euclidean dot
    int dual_coxeter = 0;

    std::size_t num_positive() const { return positive_roots.size(); }
    std::size_t algebra_dim() const { return 2 * positive_roots.size() + rank; }

    Rational euclid(const Vector& a, const Vector& b) const;
    /// Inner product normalized so that (theta, theta) = 2.
    Rational normalized(const Vector& a, const Vector& b) const { return scale * euclid(a, b); }
    /// Euclidean vector of sum c_i alpha_i.
    Vector from_coeffs(const std::vector<int>& c) const;
    /// Euclidean vector of a weight given in Dynkin labels.
    Vector weight_vector(const Weight& w) const;
    /// Index of the positive root with the given coefficients, or -1.
    long find_positive(const std::vector<int>& coeffs) const;
    /// Dynkin labels of the highest root (the adjoint highest weight).
    Weight adjoint_weight() const;
    /// Integer <lambda, alpha_i^vee> for a Euclidean vector.
    long long pairing_coroot(const Vector& v, std::size_t i) const;
    bool is_long(std::size_t positive_index) const;

    std::map<std::vector<int>, std::size_t> coeff_index;  ///< coefficients -> positive index
};

/// Builds the root system; throws std::invalid_argument on an invalid type.
RootSystem build_root_system(SimpleType type);
RootSystem build_root_system(Family family, int rank);

/// Weyl dimension formula; throws std::invalid_argument for non-dominant weights.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& w);
/// (Lambda, Lambda + 2 rho) under the normalized product.
Rational casimir_pairing(const RootSystem& rs, const Weight& w);

/// Weights (Dynkin labels) of the Weyl orbit of a dominant weight, sorted.
std::vector<std::vector<long long>> weyl_orbit(const RootSystem& rs, const Weight& w);
/// Full weight multiset (Dynkin labels -> multiplicity) of an irreducible module,
/// computed with Freudenthal's multiplicity formula.
std::map<std::vector<long long>, long long> weight_multiset(const RootSystem& rs, const Weight& w);

/// Structure constants N(alpha, beta) of a Chevalley basis, fixed by the
/// extraspecial-pair convention over the positive-root order of the system.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs);

    /// Roots are encoded as ids: k in [0, P) is positive root k, P + k is its negative.
    std::size_t num_positive() const { return P_; }
    std::vector<int> coeffs(std::size_t id) const;
    /// Id of the root with the given coefficients, or -1 (also -1 for the zero vector).
    long find(const std::vector<int>& coeffs) const;
    std::size_t negate(std::size_t id) const { return id < P_ ? id + P_ : id - P_; }
    /// N(a, b) with [e_a, e_b] = N e_{a+b}; zero when a + b is not a root.
    long long N(std::size_t a, std::size_t b) const;
    /// Euclidean squared length of the root.
    const Rational& length2(std::size_t id) const { return len2_[id % P_]; }

private:
    long long N_pos(std::size_t a, std::size_t b) const;
    Rational N_rat(std::size_t a, std::size_t b) const;

    const RootSystem* rs_;
    std::size_t P_;
    std::vector<Rational> len2_;
    std::map<std::pair<std::size_t, std::size_t>, long long> special_;
};

}  // namespace tkk
