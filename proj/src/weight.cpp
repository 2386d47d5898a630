#include "tdl/weight.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tdl {

namespace {

std::int64_t parse_int(std::string_view s)
{
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("weight: not an integer: '" + std::string(s) + "'");
    return out;
}

}  // namespace

WeightParam WeightParam::rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("weight: zero denominator");
    Rational a(num, den);
    if (a < Rational(1))
        throw std::invalid_argument("weight: a must be >= 1");
    return WeightParam(a, boost::rational_cast<double>(a));
}

WeightParam WeightParam::real(double a)
{
    if (!std::isfinite(a) || a < 1.0)
        throw std::invalid_argument("weight: a must be a finite real >= 1");
    return WeightParam(std::nullopt, a);
}

WeightParam WeightParam::log2_3()
{
    return real(std::log2(3.0));
}

WeightParam WeightParam::parse(std::string_view text)
{
    if (text == "log2(3)" || text == "log2_3" || text == "log23")
        return log2_3();
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        // Terminating decimals stay exact.
        auto frac = text.substr(dot + 1);
        if (frac.size() <= 12 && !frac.empty()) {
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            auto whole = text.substr(0, dot);
            std::int64_t w = whole.empty() ? 0 : parse_int(whole);
            return rational(w * den + parse_int(frac), den);
        }
        return real(std::stod(std::string(text)));
    }
    return rational(parse_int(text), 1);
}

std::string WeightParam::to_string() const
{
    std::ostringstream os;
    if (exact_) {
        os << exact_->numerator();
        if (exact_->denominator() != 1)
            os << '/' << exact_->denominator();
    } else {
        os.precision(10);
        os << value_;
    }
    return os.str();
}

int WeightParam::compare(std::int64_t f2a, std::int64_t f1a, std::int64_t f2b, std::int64_t f1b) const
{
    if (exact_) {
        const std::int64_t lhs = exact_->numerator() * (f2a - f2b) + exact_->denominator() * (f1a - f1b);
        return (lhs > 0) - (lhs < 0);
    }
    const double diff = value_ * static_cast<double>(f2a - f2b) + static_cast<double>(f1a - f1b);
    if (std::abs(diff) <= kFloatTolerance)
        return 0;
    return diff > 0 ? 1 : -1;
}

WeightedValue WeightedValue::of(const WeightParam& w, std::int64_t f2, std::int64_t f1)
{
    WeightedValue out;
    if (w.exact())
        out.exact = *w.exact() * f2 + f1;
    out.approx = w.value() * static_cast<double>(f2) + static_cast<double>(f1);
    return out;
}

std::string WeightedValue::to_string() const
{
    std::ostringstream os;
    if (exact) {
        os << exact->numerator();
        if (exact->denominator() != 1)
            os << '/' << exact->denominator();
    } else {
        os.precision(10);
        os << approx;
    }
    return os.str();
}

}  // namespace tdl
