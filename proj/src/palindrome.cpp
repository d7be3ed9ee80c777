#include "palinsum/palindrome.hpp"

#include <stdexcept>

namespace palinsum {

bool is_palindrome(const Numeral& n) {
    const auto& ds = n.digits();
    for (std::size_t i = 0, j = ds.size(); i + 1 < j; ++i, --j)
        if (ds[i] != ds[j - 1]) return false;
    return true;
}

digit_t DigitMap::operator()(digit_t x) const {
    if (x >= base) throw std::invalid_argument("digit out of range for base");
    if (x == 0) return 0;
    if (x == 1) return 1;
    return base - x + 1;
}

std::vector<Numeral> sparse_decompose(const Numeral& n) {
    const digit_t d = n.base();
    const DigitMap f{d};
    std::vector<Numeral> parts;
    const auto& ds = n.digits();
    for (std::size_t j = 0; j < ds.size(); ++j) {
        const digit_t x = ds[j];
        if (x == 0) continue;
        if (j == 0) {
            parts.push_back(Numeral::from_value(d, x));
            continue;
        }
        const digit_t fx = f(x);
        parts.push_back(Numeral::from_value(d, fx));
        std::vector<digit_t> spike(j + 1, 0);
        spike[j] = x;
        parts.push_back(sub(Numeral::from_digits(d, std::move(spike)), Numeral::from_value(d, fx)));
    }
    return parts;
}

}  // namespace palinsum
