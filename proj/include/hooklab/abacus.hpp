#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/report.hpp"

namespace hooklab {

/// A canonical finite window of a bi-infinite 0/1 word. Every position left
/// of the window is 0 and every position right of it is 1. The origin fixes
/// index 0 so that the balance condition holds:
///
///     #{ i <= -1 : c_i = 1 } = #{ i >= 0 : c_i = 0 }.
///
/// Serialized form puts a dot at the origin with leading zeros and trailing
/// ones trimmed, e.g. "1100101.0101100"; the word of the empty partition is
/// just ".".
class AbacusWord {
public:
    /// The word ...000.111... of the empty partition.
    AbacusWord() = default;

    /// Window bits with window[origin] at position 0. Throws
    /// std::invalid_argument if a bit is not 0/1 or the balance is violated.
    AbacusWord(std::vector<std::uint8_t> window, int origin);

    /// Builds the canonical word for an arbitrary 0/1 pattern by choosing
    /// the unique origin that balances it.
    static AbacusWord canonical(std::vector<std::uint8_t> bits);

    static AbacusWord parse(std::string_view text);
    std::string to_string() const;

    /// Bit at any position of the bi-infinite word (tails included).
    int bit(long long pos) const noexcept;

    /// First position not in the all-zero left tail.
    long long lo() const noexcept { return -origin_; }
    /// First position of the all-one right tail.
    long long hi() const noexcept { return static_cast<long long>(window_.size()) - origin_; }

    const std::vector<std::uint8_t>& window() const noexcept { return window_; }
    int origin() const noexcept { return origin_; }

    bool operator==(const AbacusWord& other) const noexcept {
        return origin_ == other.origin_ && window_ == other.window_;
    }

private:
    void trim();
    // Trimmed: window_ is empty or starts with 1 and ends with 0.
    std::vector<std::uint8_t> window_;
    int origin_ = 0;
};

/// Rim codec: horizontal rim edges map to 1, vertical edges to 0, read from
/// the bottom of the Young diagram to the top.
AbacusWord encode(const Partition& p);
Partition decode(const AbacusWord& word);

/// phi_t(lambda): t-core plus ordered t-quotient, with
/// |lambda| = |core| + t * sum |quotient[i]|.
struct LittlewoodImage {
    Partition core;
    std::vector<Partition> quotient;
    int t = 1;

    int quotient_size() const;
};

LittlewoodImage decompose(const Partition& p, int t);

/// Inverse of decompose. Throws std::invalid_argument if the image is
/// malformed or its core is not a t-core.
Partition compose(const LittlewoodImage& image);

Partition t_core(const Partition& p, int t);

/// True iff no hook length of p is divisible by t (equivalently none
/// equals t). Checked on the hook multiset, independently of the codec.
bool is_t_core(const Partition& p, int t);

/// Checks the self-conjugate restriction of the Littlewood decomposition on
/// p: core self-conjugate (SC1), quotient conjugate-pairing (SC2/SC2'),
/// the size formula (SC3) and the hook multiset law H_t(lambda) = t H(nu)
/// (SC4). Requires p self-conjugate; failures are encoded in the report.
VerificationReport verify_sc_properties(const Partition& p, int t);

} // namespace hooklab
