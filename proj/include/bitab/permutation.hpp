#pragma once

/// \file permutation.hpp
/// \brief Bijections on 1..n with composition, inversion and cycle notation.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitab {

/// A permutation sigma of 1..n. Labels are 1-based at the interface; the
/// image of i is stored at index i-1.
class Permutation {
public:
    Permutation() = default;

    /// Builds from the image list [sigma(1), ..., sigma(n)].
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 1 || v > size() || seen[v - 1])
                throw std::invalid_argument("permutation: images are not a bijection of 1.." +
                                            std::to_string(size()));
            seen[v - 1] = 1;
        }
    }

    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images[i] = i + 1;
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    static Permutation transposition(int n, int i, int j) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw std::invalid_argument("transposition (" + std::to_string(i) + " " +
                                        std::to_string(j) + ") is not valid on 1.." +
                                        std::to_string(n));
        Permutation p = identity(n);
        std::swap(p.images_[i - 1], p.images_[j - 1]);
        return p;
    }

    /// The cycle (c1 c2 ... cr): c1 -> c2 -> ... -> cr -> c1.
    static Permutation cycle(int n, std::span<const int> elems) {
        Permutation p = identity(n);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int c : elems) {
            if (c < 1 || c > n) throw std::invalid_argument("cycle entry out of range");
            if (seen[c - 1]) throw std::invalid_argument("cycle repeats entry " + std::to_string(c));
            seen[c - 1] = 1;
        }
        for (std::size_t t = 0; t < elems.size(); ++t)
            p.images_[elems[t] - 1] = elems[(t + 1) % elems.size()];
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }

    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images_[i] != i + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// Lexicographic order on image lists.
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// (a o b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int x = 1; x <= a.size(); ++x) images[x - 1] = a(b(x));
    return Permutation(std::move(images));
}

inline Permutation invert(const Permutation& a) {
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int x = 1; x <= a.size(); ++x) images[a(x) - 1] = x;
    return Permutation(std::move(images));
}

/// Disjoint cycle notation, each cycle led by its smallest element, cycles
/// ordered by leader, fixed points omitted. The identity prints as "()".
inline std::string to_cycle_string(const Permutation& a) {
    std::string out;
    std::vector<char> seen(static_cast<std::size_t>(a.size()), 0);
    for (int start = 1; start <= a.size(); ++start) {
        if (seen[start - 1] || a(start) == start) continue;
        out += '(';
        for (int x = start; !seen[x - 1]; x = a(x)) {
            seen[x - 1] = 1;
            if (x != start) out += ' ';
            out += std::to_string(x);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace bitab
