#ifndef SIGNSYM_PERM_HPP
#define SIGNSYM_PERM_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace signsym {

// Sign value in {+1, -1}. Kept as plain int; helpers enforce the invariant.
using Sign = int;

inline Sign sign_check(int s) {
    if (s != 1 && s != -1) throw std::logic_error("sign must be +1 or -1");
    return s;
}

// A permutation of {0, ..., n-1}. Cycles are enumerated deterministically,
// each starting at its least element, cycles ordered by least element.
class FinitePermutation {
public:
    FinitePermutation() = default;
    explicit FinitePermutation(std::vector<size_t> image) : img_(std::move(image)) {
        std::vector<char> seen(img_.size(), 0);
        for (size_t v : img_) {
            if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a bijection");
            seen[v] = 1;
        }
    }

    static FinitePermutation identity(size_t n) {
        std::vector<size_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = i;
        return FinitePermutation(std::move(v));
    }

    size_t size() const { return img_.size(); }
    size_t operator()(size_t i) const { return img_[i]; }

    std::vector<std::vector<size_t>> cycles() const {
        std::vector<std::vector<size_t>> cyc;
        std::vector<char> seen(img_.size(), 0);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<size_t> c;
            size_t j = i;
            do {
                c.push_back(j);
                seen[j] = 1;
                j = img_[j];
            } while (j != i);
            cyc.push_back(std::move(c));
        }
        return cyc;
    }

    size_t orbit_count() const {
        size_t n = 0;
        std::vector<char> seen(img_.size(), 0);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            ++n;
            for (size_t j = i; !seen[j]; j = img_[j]) seen[j] = 1;
        }
        return n;
    }

    // (-1)^(number of even-length cycles); the character taking -1 at
    // any transposition.
    Sign sign() const {
        Sign s = 1;
        for (const auto& c : cycles())
            if (c.size() % 2 == 0) s = -s;
        return s;
    }

private:
    std::vector<size_t> img_;
};

} // namespace signsym

#endif
