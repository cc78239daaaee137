#pragma once

#include "dcrit/generators.hpp"
#include "dcrit/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dcrit {

/// Sorted list of generator indices. Even generators may repeat; odd ones
/// appear at most once. Order is the global generator order.
using Monomial = std::vector<std::uint16_t>;

/// Element of the free graded-commutative algebra on a GeneratorTable.
/// Normal form: monomials sorted, sign of the reordering folded into the
/// coefficient, no zero coefficients stored.
class SuperPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit SuperPoly(TablePtr table) : table_(std::move(table)) {}
    static SuperPoly constant(TablePtr table, const Rational& c);
    static SuperPoly generator(TablePtr table, std::uint16_t index);
    static SuperPoly generator(TablePtr table, Block b, int i, int j);
    static SuperPoly monomial(TablePtr table, const Monomial& m, const Rational& c);

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Cohomological / form degree if homogeneous.
    std::optional<int> degree() const;
    std::optional<int> form_degree() const;
    /// Parity if homogeneous in parity; throws otherwise.
    bool odd() const;

    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    SuperPoly& operator*=(const Rational& c);
    SuperPoly operator-() const;
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    friend SuperPoly operator*(SuperPoly a, const Rational& c) { return a *= c; }
    friend SuperPoly operator*(const Rational& c, SuperPoly a) { return a *= c; }
    /// Graded-commutative product.
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);

    friend bool operator==(const SuperPoly& a, const SuperPoly& b);
    friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

    /// Adds c * m; m must already be in normal form.
    void add_term(const Monomial& m, const Rational& c);

    /// Reinterprets the polynomial in a larger table that has this table's
    /// generators as a prefix (base table -> de Rham table).
    SuperPoly with_table(TablePtr larger) const;
    /// Inverse of with_table; throws if a generator outside the prefix occurs.
    SuperPoly restricted_to(TablePtr smaller) const;

    /// Value after substituting scalars for degree-0, form-0 generators and 0
    /// for every other generator.
    Rational evaluate(const std::function<Rational(std::uint16_t)>& value) const;

    /// Coefficient (on the left) of the given single generator factor: the
    /// sum of c * m' over terms c * m' * g... is rewritten as c' * m' with g
    /// moved to the far right. Used to read A-coefficients of module symbols.
    std::map<std::uint16_t, SuperPoly> split_last(const std::function<bool(std::uint16_t)>& is_symbol) const;

    /// Partial derivative with respect to an even generator.
    SuperPoly partial_even(std::uint16_t gen) const;

    std::string str() const;

private:
    TablePtr table_;
    Terms terms_;
};

/// Product of two monomials: returns the sign (0 if the product vanishes) and
/// writes the merged monomial.
int multiply_monomials(const GeneratorTable& t, const Monomial& a, const Monomial& b, Monomial& out);

int monomial_degree(const GeneratorTable& t, const Monomial& m);
int monomial_form_degree(const GeneratorTable& t, const Monomial& m);
bool monomial_odd(const GeneratorTable& t, const Monomial& m);

void require_same_table(const TablePtr& a, const TablePtr& b);

/// Graded derivation of bidegree (degree, form_degree) given by its values
/// on generators. Images are validated to be homogeneous of the shifted
/// bidegree. Leibniz: D(ab) = D(a) b + (-1)^{|D||a|} a D(b) with |.| the
/// total parity.
class Derivation {
public:
    Derivation(TablePtr table, int degree, int form_degree);

    void set(std::uint16_t gen, SuperPoly image);
    const SuperPoly& image(std::uint16_t gen) const { return images_[gen]; }
    const TablePtr& table() const { return table_; }
    int degree() const { return degree_; }
    int form_degree() const { return form_; }
    bool odd() const { return ((degree_ + form_) & 1) != 0; }

    SuperPoly apply(const SuperPoly& a) const;

private:
    TablePtr table_;
    int degree_;
    int form_;
    std::vector<SuperPoly> images_;
};

}  // namespace dcrit
