#include "leaky/linform.hpp"

#include <cctype>
#include <stdexcept>

namespace leaky {

namespace {

void append_term(std::string& out, std::int64_t c, const std::string& symbol) {
    if (c == 0) {
        return;
    }
    if (c < 0) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || symbol.empty()) {
        out += std::to_string(a);
    }
    out += symbol;
}

}  // namespace

LinForm LinForm::variable(int index) {
    LinForm f;
    f.add_variable(index, 1);
    return f;
}

LinForm LinForm::leak() {
    LinForm f;
    f.k_coeff_ = 1;
    return f;
}

LinForm LinForm::constant(std::int64_t c) {
    LinForm f;
    f.constant_ = c;
    return f;
}

std::int64_t LinForm::coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? 0 : it->second;
}

void LinForm::add_variable(int index, std::int64_t c) {
    if (index < 1) {
        throw std::out_of_range("LinForm: variable index must be >= 1");
    }
    auto& slot = coeffs_[index];
    slot += c;
    if (slot == 0) {
        coeffs_.erase(index);
    }
}

std::int64_t LinForm::eval(std::span<const std::int64_t> x, std::int64_t k) const {
    std::int64_t v = k_coeff_ * k + constant_;
    for (const auto& [i, c] : coeffs_) {
        if (static_cast<std::size_t>(i) > x.size()) {
            throw std::out_of_range("LinForm::eval: x" + std::to_string(i) + " missing from point of size " +
                                    std::to_string(x.size()));
        }
        v += c * x[static_cast<std::size_t>(i) - 1];
    }
    return v;
}

LinForm LinForm::at_leak(std::int64_t k) const {
    LinForm f = *this;
    f.constant_ += f.k_coeff_ * k;
    f.k_coeff_ = 0;
    return f;
}

std::string LinForm::str() const {
    std::string out;
    for (const auto& [i, c] : coeffs_) {
        append_term(out, c, "x" + std::to_string(i));
    }
    append_term(out, k_coeff_, "k");
    append_term(out, constant_, "");
    return out.empty() ? "0" : out;
}

std::string LinForm::str(std::int64_t k) const { return at_leak(k).str(); }

LinForm LinForm::parse(std::string_view text) {
    LinForm f;
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("malformed linear form: " + std::string(text)); };
    if (text.empty()) {
        fail();
    }
    while (pos < text.size()) {
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail();
        }
        std::size_t digits_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        const bool has_digits = pos > digits_start;
        const std::int64_t magnitude =
            has_digits ? std::stoll(std::string(text.substr(digits_start, pos - digits_start))) : 1;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            std::size_t idx_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (pos == idx_start) {
                fail();
            }
            f.add_variable(std::stoi(std::string(text.substr(idx_start, pos - idx_start))), sign * magnitude);
        } else if (pos < text.size() && text[pos] == 'k') {
            ++pos;
            f.k_coeff_ += sign * magnitude;
        } else {
            if (!has_digits) {
                fail();
            }
            f.constant_ += sign * magnitude;
        }
    }
    return f;
}

LinForm LinForm::operator-() const {
    LinForm f = *this;
    f *= -1;
    return f;
}

LinForm& LinForm::operator+=(const LinForm& o) {
    for (const auto& [i, c] : o.coeffs_) {
        add_variable(i, c);
    }
    k_coeff_ += o.k_coeff_;
    constant_ += o.constant_;
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) { return *this += -o; }

LinForm& LinForm::operator*=(std::int64_t s) {
    if (s == 0) {
        *this = LinForm();
        return *this;
    }
    for (auto& [i, c] : coeffs_) {
        c *= s;
    }
    k_coeff_ *= s;
    constant_ *= s;
    return *this;
}

}  // namespace leaky
