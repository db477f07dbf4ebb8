// Words over a generator alphabet, ordered degree-lexicographically by
// generator id (ids are assigned in precedence order).
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

using Gen = std::uint8_t;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Word {
public:
    static constexpr int kMax = 31;

    Word() = default;
    Word(std::initializer_list<Gen> l) {
        for (Gen g : l) push(g);
    }
    static Word of(Gen g) { return Word{g}; }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    Gen operator[](int k) const { return l_[k]; }
    const Gen* begin() const { return l_.data(); }
    const Gen* end() const { return l_.data() + n_; }

    void push(Gen g) {
        if (n_ >= kMax) throw ResourceError("word length exceeds " + std::to_string(kMax));
        l_[n_++] = g;
    }
    Word slice(int from, int to) const {
        Word w;
        for (int k = from; k < to; ++k) w.l_[w.n_++] = l_[k];
        return w;
    }
    Word reversed() const {
        Word w;
        for (int k = n_; k-- > 0;) w.l_[w.n_++] = l_[k];
        return w;
    }
    // position of the first occurrence of p at or after from, or -1
    int find(const Word& p, int from = 0) const {
        for (int k = from; k + p.n_ <= n_; ++k)
            if (std::memcmp(l_.data() + k, p.l_.data(), p.n_) == 0) return k;
        return -1;
    }
    bool ends_with(const Word& p) const {
        return p.n_ <= n_ && std::memcmp(l_.data() + n_ - p.n_, p.l_.data(), p.n_) == 0;
    }

    friend Word operator*(const Word& a, const Word& b) {
        if (a.n_ + b.n_ > kMax) throw ResourceError("word length exceeds " + std::to_string(kMax));
        Word w = a;
        std::memcpy(w.l_.data() + a.n_, b.l_.data(), b.n_);
        w.n_ = static_cast<std::uint8_t>(a.n_ + b.n_);
        return w;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.n_ == b.n_ && std::memcmp(a.l_.data(), b.l_.data(), a.n_) == 0;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    // degree-lexicographic
    friend bool operator<(const Word& a, const Word& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::memcmp(a.l_.data(), b.l_.data(), a.n_) < 0;
    }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }

    std::size_t hash() const {
        std::size_t h = n_;
        for (int k = 0; k < n_; ++k) h = h * 131 + l_[k] + 1;
        return h;
    }

private:
    std::uint8_t n_ = 0;
    std::array<Gen, kMax> l_{};
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace qc
