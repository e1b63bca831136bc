#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osp/crystal.hpp"

namespace osp {

// Laurent polynomial in q^{1/2}; keys are twice the q-exponent.
struct Laurent {
    std::map<int, long long> c;

    static Laurent constant(long long v);
    static Laurent q(int e, long long coef = 1);  // coef * q^e
    static Laurent half(int e2, long long coef = 1);  // coef * q^{e2/2}

    bool is_zero() const { return c.empty(); }
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o);
    bool operator==(const Laurent& o) const { return c == o.c; }

    // q -> q^r
    Laurent subs(int r) const;
    int low() const;  // lowest key; only for nonzero values
    // coefficient of q^0; meaningful mod q when low() >= 0
    long long at_zero() const;
};

std::optional<Laurent> exact_div(const Laurent& a, const Laurent& b);
// [k] with q replaced by q^s (s may be negative)
Laurent qnum(int k, int s = 1);
Laurent qfact(int k, int s = 1);
Laurent qbinom(int n, int k, int s = 1);
std::string to_string(const Laurent& x);

enum class FockG { b, bb, c, d };
enum class Ambient { F_q, F_plus_q2, F_plus_q2_tensor2, F_plus_q };

FockG parse_fock_g(const std::string& s);
std::string to_string(FockG g);
std::string to_string(Ambient a);
Ambient ambient_for(FockG g);

// one factor of a product psi_m|0>, in the order of <
struct FockSlot {
    Letter a;
    bool neg = false;  // -a
};

struct FockSpace {
    FockG g = FockG::c;
    Ambient amb = Ambient::F_q;
    int m = 0;
    int n = 0;
    std::vector<FockSlot> slots;  // one tensor factor

    int factors() const { return amb == Ambient::F_plus_q2_tensor2 ? 2 : 1; }
    int r() const { return (amb == Ambient::F_plus_q2 || amb == Ambient::F_plus_q2_tensor2) ? 2 : 1; }
    int width() const { return static_cast<int>(slots.size()) * factors(); }
    int slot(Letter a, bool neg) const;  // -1 when absent
    // parity of psi_a as an operator, used for tensor signs
    int op_parity(Letter a) const;
};

// tensor = true puts g = b on two factors (the ambient of the highest weight vectors)
FockSpace make_space(FockG g, int m, int n, bool tensor = false);

// occupation numbers, factor after factor
using Occupation = std::vector<int>;

struct FockVector {
    std::map<Occupation, Laurent> terms;

    void add(const Occupation& o, const Laurent& x);
    void add(const FockVector& v, const Laurent& x);
    bool is_zero() const { return terms.empty(); }
    FockVector scaled(const Laurent& x) const;
    bool operator==(const FockVector& o) const { return terms == o.terms; }
};

FockVector basis_vector(const Occupation& o);
FockVector vacuum(const FockSpace& S);
int degree(const Occupation& o);
// all basis occupations of total degree <= d
std::vector<Occupation> basis_up_to(const FockSpace& S, int d);
std::string to_string(const FockSpace& S, const Occupation& o);
std::string to_string(const FockSpace& S, const FockVector& v);
std::string to_json(const FockSpace& S, const FockVector& v);

enum class GenKind { Psi, PsiStar, Omega };
struct Generator {
    GenKind kind = GenKind::Psi;
    Letter a;
    bool neg = false;
    int exponent = 1;  // omega only
    int factor = 0;
};

FockVector apply_generator(const FockSpace& S, const Generator& x, const FockVector& v);

// root data of g_{m|n}
struct Coweight {
    std::map<Letter, int> E;
    int K = 0;
};
std::map<Letter, int> simple_root(FockG g, int m, Index i);
Coweight simple_coroot(FockG g, int m, Index i);
int symmetrizer(FockG g, int m, Index i);  // s_i
int root_parity(FockG g, int m, Index i);  // |beta_i|
int cartan(FockG g, int m, Index i, Index j);
std::vector<Index> fock_indices(const FockSpace& S);

struct UqGen {
    enum Kind { E, F, QH } kind = E;
    Index i;
    Coweight h;
};

FockVector uq_e(const FockSpace& S, Index i, const FockVector& v);
FockVector uq_f(const FockSpace& S, Index i, const FockVector& v);
FockVector uq_qh(const FockSpace& S, const Coweight& h, const FockVector& v);
FockVector uq_t(const FockSpace& S, Index i, int power, const FockVector& v);
FockVector uq_action(const FockSpace& S, const UqGen& x, const FockVector& v);

// <h, wt> on a basis vector, as twice the q-exponent of q^h
int weight_pairing2(const FockSpace& S, const Coweight& h, const Occupation& o);

// vector over Q(q): Laurent numerators over one common denominator
struct FracVector {
    FockVector num;
    Laurent den = Laurent::constant(1);
};
FracVector frac_add(const FracVector& a, const FracVector& b, const Laurent& x);
FracVector frac_div(const FracVector& a, const Laurent& d);
// coefficients at q = 0, or nullopt when some coefficient has a pole there
std::optional<std::map<Occupation, long long>> reduce_mod_q(const FracVector& v);
std::string to_string(const FockSpace& S, const FracVector& v);

// throws std::invalid_argument on a non-homogeneous vector
FracVector kashiwara(const FockSpace& S, const FockVector& v, Index i, Dir d);

struct FockReport {
    bool ok = true;
    std::string witness;
    long long checks = 0;
    void fail(const std::string& w);
};

// defining relations of the Clifford-Weyl algebra on every factor
FockReport check_algebra_relations(const FockSpace& S, int degree_bound);
// weight and e/f commutator relations (plus commuting pairs with a_ij = 0)
FockReport check_uq_relations(const FockSpace& S, int degree_bound);
// Serre-type and quartic relations
FockReport check_serre_relations(const FockSpace& S, int degree_bound);
// F_q against F^- (x) F^+ for gl(m|n)
FockReport check_gl_factorization(int m, int n, int degree_bound);

// combinatorial image of a basis vector: (T^-, T^+) for c, T^+ for b,
// two spin columns for b-bullet
std::vector<Piece> psi_map(const FockSpace& S, const Occupation& o);
std::optional<Occupation> psi_map_inverse(const FockSpace& S, const std::vector<Piece>& P);

FockReport crystal_base_check(const FockSpace& S, int degree_bound);

struct HighestVectorReport {
    FockVector v;
    int size = 0;  // |M(a)|
    bool table_agrees = true;  // Q_{M,M'} against the closed formula
    std::string table_note;
};
// throws std::logic_error when a check fails
HighestVectorReport highest_weight_vector_b(int a, int m, int n, FockG g);

}  // namespace osp
