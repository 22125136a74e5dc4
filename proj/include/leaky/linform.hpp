#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace leaky {

/// Integer affine-linear form  sum_i c_i x_i + c_k k + c_0  in the profile
/// variables x_1..x_n (1-based) and the leak k. Zero coefficients are never
/// stored, so structural equality is equality of forms.
class LinForm {
public:
    LinForm() = default;

    static LinForm variable(int index);
    static LinForm leak();
    static LinForm constant(std::int64_t c);

    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(int index) const;
    std::int64_t k_coeff() const { return k_coeff_; }
    std::int64_t constant_term() const { return constant_; }

    void add_variable(int index, std::int64_t c);
    void add_leak(std::int64_t c) { k_coeff_ += c; }
    void add_constant(std::int64_t c) { constant_ += c; }

    bool is_zero() const { return coeffs_.empty() && k_coeff_ == 0 && constant_ == 0; }
    int max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    /// Throws std::out_of_range if the form uses an index beyond x.size().
    std::int64_t eval(std::span<const std::int64_t> x, std::int64_t k) const;

    /// Folds k into the constant term.
    LinForm at_leak(std::int64_t k) const;

    /// "x1+x2+x3-2k"
    std::string str() const;
    /// Same with k substituted: "x1+x2+x3-2" for k = 1.
    std::string str(std::int64_t k) const;
    /// Inverse of str(); accepts terms like "x3", "-2x1", "+3k", "-5".
    static LinForm parse(std::string_view text);

    LinForm operator-() const;
    LinForm& operator+=(const LinForm& o);
    LinForm& operator-=(const LinForm& o);
    LinForm& operator*=(std::int64_t s);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, std::int64_t s) { return a *= s; }
    friend LinForm operator*(std::int64_t s, LinForm a) { return a *= s; }

    friend bool operator==(const LinForm&, const LinForm&) = default;
    friend auto operator<=>(const LinForm&, const LinForm&) = default;

private:
    std::map<int, std::int64_t> coeffs_;
    std::int64_t k_coeff_ = 0;
    std::int64_t constant_ = 0;
};

}  // namespace leaky
