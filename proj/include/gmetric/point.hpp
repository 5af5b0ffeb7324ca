#pragma once

#include <string>
#include <variant>

#include "gmetric/numfmt.hpp"

namespace gmetric {

// A point of the abstract carrier: either a real coordinate or an atom label
// (finite-space elements, the augmented line's sentinel).
class Point {
public:
    Point() : v_(0.0) {}
    explicit Point(double x) : v_(x) {}
    explicit Point(std::string label) : v_(std::move(label)) {}

    bool is_real() const { return std::holds_alternative<double>(v_); }
    double real() const { return std::get<double>(v_); }
    const std::string& label() const { return std::get<std::string>(v_); }

    std::string str() const { return is_real() ? format_real(real()) : label(); }

    // Reals when the text parses as a number, atoms otherwise.
    static Point parse(const std::string& text);

    bool operator==(const Point& o) const = default;

private:
    std::variant<double, std::string> v_;
};

} // namespace gmetric
