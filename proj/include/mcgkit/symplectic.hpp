#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace mcg {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients in the ordered basis A_1, B_1, ..., A_g, B_g.
struct HomologyClass {
    int genus = 0;
    std::vector<BigInt> coeffs;

    HomologyClass() = default;
    explicit HomologyClass(int g) : genus(g), coeffs(2 * static_cast<std::size_t>(g)) {}
    HomologyClass(int g, std::vector<BigInt> c);

    static HomologyClass A(int g, int i);  // 1-based handle index
    static HomologyClass B(int g, int i);

    bool is_zero() const;
    bool operator==(const HomologyClass& o) const = default;
    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass operator-() const;
    std::string str() const;
};

// Square integer matrix acting on column vectors; column j is the image of basis vector j.
class SympMatrix {
public:
    SympMatrix() = default;
    explicit SympMatrix(int genus);  // identity
    static SympMatrix zero(int genus);

    int genus() const { return genus_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(genus_); }
    BigInt& at(std::size_t r, std::size_t c) { return a_[r * dim() + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * dim() + c]; }

    SympMatrix operator*(const SympMatrix& o) const;
    HomologyClass operator*(const HomologyClass& v) const;
    bool operator==(const SympMatrix& o) const = default;
    bool is_identity() const;
    SympMatrix transpose() const;
    std::string str() const;

private:
    int genus_ = 0;
    std::vector<BigInt> a_;
};

// Signed pairing with <A_i,B_i> = +1.
BigInt pairing(const HomologyClass& x, const HomologyClass& y);

// x -> x + <x,c> c
SympMatrix transvection(const HomologyClass& c);
SympMatrix transvection_power(const HomologyClass& c, long long n);

SympMatrix standard_form(int genus);  // J
bool is_symplectic(const SympMatrix& m);

}  // namespace mcg
