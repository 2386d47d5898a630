#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace tdl {

using Rational = boost::rational<std::int64_t>;

// Weight a >= 1 applied to 2-cycles in the weighted size a*f2 + f1.
// Rational weights are exact; irrational ones (log2 3) carry only a double.
class WeightParam {
public:
    static WeightParam rational(std::int64_t num, std::int64_t den = 1);
    static WeightParam real(double a);
    static WeightParam log2_3();

    // Accepts "2", "3/2", "1.25", "log2(3)".
    static WeightParam parse(std::string_view text);

    bool is_exact() const { return exact_.has_value(); }
    const std::optional<Rational>& exact() const { return exact_; }
    double value() const { return value_; }
    std::string to_string() const;

    // Sign of (a*f2a + f1a) - (a*f2b + f1b); float weights compare with
    // absolute tolerance kFloatTolerance.
    int compare(std::int64_t f2a, std::int64_t f1a, std::int64_t f2b, std::int64_t f1b) const;

    static constexpr double kFloatTolerance = 1e-9;

private:
    WeightParam(std::optional<Rational> exact, double value) : exact_(exact), value_(value) {}

    std::optional<Rational> exact_;
    double value_ = 1.0;
};

// a*f2 + f1, exact when the weight is.
struct WeightedValue {
    std::optional<Rational> exact;
    double approx = 0.0;

    static WeightedValue of(const WeightParam& w, std::int64_t f2, std::int64_t f1);
    std::string to_string() const;
};

}  // namespace tdl
