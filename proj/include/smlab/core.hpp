#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace smlab {

/// Malformed input: bad construction arguments, mismatched owners,
/// ill-defined maps. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap was exceeded. Maps to CLI exit code 3.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps for construction and enumeration.
struct Caps {
    int max_ring_order = 4096;
    int max_module_order = 4096;
    int max_lattice = 10000;  // submodules/ideals per structure
};

inline const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

/// Product of the distinct prime factors of n (radical of the integer n).
/// rad(0) = 0, rad(1) = 1.
inline long long int_radical(long long n) {
    if (n < 0) n = -n;
    if (n <= 1) return n;
    long long out = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out *= p;
            while (n % p == 0) n /= p;
        }
    }
    return out * n;  // n is now 1 or a leftover prime
}

inline bool is_prime_power(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    }
    return true;  // prime
}

/// Subset of a fixed universe {0, ..., universe-1} of element ids, with O(1)
/// membership and a canonical sorted item list. Built once, then read-only.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int universe) : mask_(universe, 0) {}

    int universe() const { return static_cast<int>(mask_.size()); }
    int size() const { return count_; }
    bool contains(int x) const { return mask_[x] != 0; }

    /// Returns true if x was newly inserted.
    bool insert(int x) {
        if (mask_[x]) return false;
        mask_[x] = 1;
        ++count_;
        sorted_ = false;
        items_.push_back(x);
        return true;
    }

    const std::vector<int>& items() const {
        if (!sorted_) {
            std::sort(items_.begin(), items_.end());
            sorted_ = true;
        }
        return items_;
    }

    bool subset_of(const ElemSet& other) const {
        for (int x : items_)
            if (!other.contains(x)) return false;
        return true;
    }

    friend bool operator==(const ElemSet& a, const ElemSet& b) {
        return a.mask_ == b.mask_;
    }

    friend ElemSet intersect(const ElemSet& a, const ElemSet& b) {
        ElemSet out(a.universe());
        for (int x : a.items())
            if (b.contains(x)) out.insert(x);
        return out;
    }

private:
    std::vector<std::uint8_t> mask_;
    mutable std::vector<int> items_;
    mutable bool sorted_ = true;
    int count_ = 0;
};

/// Additive closure: grows `set` until it is closed under `add` (and hence
/// under negation, the universe being a finite group).
template <typename AddFn>
void close_under_addition(ElemSet& set, AddFn add) {
    std::vector<int> elems(set.items());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            int s = add(elems[i], elems[j]);
            if (set.insert(s)) elems.push_back(s);
        }
    }
}

}  // namespace smlab
