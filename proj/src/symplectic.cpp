#include "mcgkit/symplectic.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

HomologyClass::HomologyClass(int g, std::vector<BigInt> c) : genus(g), coeffs(std::move(c)) {
    if (coeffs.size() != 2 * static_cast<std::size_t>(g)) throw std::invalid_argument("homology class: wrong length");
}

HomologyClass HomologyClass::A(int g, int i) {
    HomologyClass h(g);
    h.coeffs.at(2 * static_cast<std::size_t>(i - 1)) = 1;
    return h;
}

HomologyClass HomologyClass::B(int g, int i) {
    HomologyClass h(g);
    h.coeffs.at(2 * static_cast<std::size_t>(i - 1) + 1) = 1;
    return h;
}

bool HomologyClass::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    if (genus != o.genus) throw std::invalid_argument("homology class: genus mismatch");
    HomologyClass r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

HomologyClass HomologyClass::operator-() const {
    HomologyClass r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const { return *this + (-o); }

std::string HomologyClass::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? " " : "") << coeffs[i];
    return os.str();
}

SympMatrix::SympMatrix(int genus) : genus_(genus), a_(dim() * dim()) {
    for (std::size_t i = 0; i < dim(); ++i) at(i, i) = 1;
}

SympMatrix SympMatrix::zero(int genus) {
    SympMatrix m(genus);
    for (auto& x : m.a_) x = 0;
    return m;
}

SympMatrix SympMatrix::operator*(const SympMatrix& o) const {
    if (genus_ != o.genus_) throw std::invalid_argument("matrix: genus mismatch");
    SympMatrix r = zero(genus_);
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

HomologyClass SympMatrix::operator*(const HomologyClass& v) const {
    if (genus_ != v.genus) throw std::invalid_argument("matrix: genus mismatch");
    HomologyClass r(genus_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) r.coeffs[i] += at(i, j) * v.coeffs[j];
    return r;
}

bool SympMatrix::is_identity() const { return *this == SympMatrix(genus_); }

SympMatrix SympMatrix::transpose() const {
    SympMatrix r = zero(genus_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) r.at(j, i) = at(i, j);
    return r;
}

std::string SympMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < dim(); ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

BigInt pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.genus != y.genus) throw std::invalid_argument("pairing: genus mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i + 1 < x.coeffs.size(); i += 2)
        s += x.coeffs[i] * y.coeffs[i + 1] - x.coeffs[i + 1] * y.coeffs[i];
    return s;
}

SympMatrix transvection_power(const HomologyClass& c, long long n) {
    // x -> x + n <x,c> c, column j = e_j + n <e_j,c> c
    SympMatrix m(c.genus);
    for (std::size_t j = 0; j < m.dim(); ++j) {
        HomologyClass e(c.genus);
        e.coeffs[j] = 1;
        BigInt p = pairing(e, c) * n;
        if (p == 0) continue;
        for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, j) += p * c.coeffs[i];
    }
    return m;
}

SympMatrix transvection(const HomologyClass& c) { return transvection_power(c, 1); }

SympMatrix standard_form(int genus) {
    SympMatrix j = SympMatrix::zero(genus);
    for (std::size_t i = 0; i < j.dim(); i += 2) {
        j.at(i, i + 1) = 1;
        j.at(i + 1, i) = -1;
    }
    return j;
}

bool is_symplectic(const SympMatrix& m) {
    SympMatrix j = standard_form(m.genus());
    return m.transpose() * j * m == j;
}

}  // namespace mcg
