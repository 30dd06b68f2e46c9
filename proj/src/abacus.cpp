#include "hooklab/abacus.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hooklab {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

std::string multiset_to_string(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    out << '}';
    return out.str();
}

} // namespace

AbacusWord::AbacusWord(std::vector<std::uint8_t> window, int origin)
    : window_(std::move(window)), origin_(origin) {
    long long left_ones = 0, right_zeros = 0;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (window_[i] != 0 && window_[i] != 1)
            throw std::invalid_argument("AbacusWord: bits must be 0 or 1");
        if (static_cast<long long>(i) < origin_)
            left_ones += window_[i];
        else
            right_zeros += window_[i] == 0;
    }
    if (origin_ < 0 || origin_ > static_cast<long long>(window_.size()))
        throw std::invalid_argument("AbacusWord: origin outside window");
    if (left_ones != right_zeros)
        throw std::invalid_argument("AbacusWord: balance violated (not canonical)");
    trim();
}

AbacusWord AbacusWord::canonical(std::vector<std::uint8_t> bits) {
    int zeros = 0;
    for (std::uint8_t b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("AbacusWord: bits must be 0 or 1");
        zeros += b == 0;
    }
    // The balance deficit increases by exactly one per origin shift, so the
    // unique canonical origin equals the number of zeros in the pattern.
    return AbacusWord(std::move(bits), zeros);
}

void AbacusWord::trim() {
    std::size_t lead = 0;
    while (lead < window_.size() && window_[lead] == 0) ++lead;
    if (lead > 0) {
        window_.erase(window_.begin(), window_.begin() + static_cast<std::ptrdiff_t>(lead));
        origin_ -= static_cast<int>(lead);
    }
    while (!window_.empty() && window_.back() == 1) window_.pop_back();
    if (window_.empty()) origin_ = 0;
}

int AbacusWord::bit(long long pos) const noexcept {
    if (pos < lo()) return 0;
    if (pos >= hi()) return 1;
    return window_[static_cast<std::size_t>(pos + origin_)];
}

AbacusWord AbacusWord::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    int origin = -1;
    for (char c : text) {
        if (c == '.') {
            if (origin >= 0) throw std::invalid_argument("AbacusWord::parse: multiple dots");
            origin = static_cast<int>(bits.size());
        } else if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else {
            throw std::invalid_argument("AbacusWord::parse: invalid character");
        }
    }
    if (origin < 0) throw std::invalid_argument("AbacusWord::parse: missing origin dot");
    return AbacusWord(std::move(bits), origin);
}

std::string AbacusWord::to_string() const {
    std::string out;
    out.reserve(window_.size() + 1);
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (static_cast<int>(i) == origin_) out.push_back('.');
        out.push_back(static_cast<char>('0' + window_[i]));
    }
    if (origin_ == static_cast<int>(window_.size())) out.push_back('.');
    return out;
}

AbacusWord encode(const Partition& p) {
    const auto& parts = p.parts();
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(p.length() + (parts.empty() ? 0 : parts.front())));
    for (int i = p.length() - 1; i >= 0; --i) {
        int below = i + 1 < p.length() ? parts[static_cast<std::size_t>(i + 1)] : 0;
        for (int h = 0; h < parts[static_cast<std::size_t>(i)] - below; ++h) bits.push_back(1);
        bits.push_back(0);
    }
    return AbacusWord::canonical(std::move(bits));
}

Partition decode(const AbacusWord& word) {
    std::vector<int> parts;
    int ones = 0;
    for (std::uint8_t b : word.window()) {
        if (b == 1)
            ++ones;
        else if (ones > 0)
            parts.push_back(ones);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

int LittlewoodImage::quotient_size() const {
    int total = 0;
    for (const Partition& nu : quotient) total += nu.size();
    return total;
}

namespace {

// Balance deficit of one residue-class subsequence relative to the inherited
// origin: #{i <= -1 : b_i = 1} - #{i >= 0 : b_i = 0}. The tails contribute
// nothing, so only positions inside the source window matter.
long long class_deficit(const AbacusWord& word, int t, int k) {
    long long deficit = 0;
    const long long i_lo = floor_div(word.lo() - k, t);
    const long long i_hi = ceil_div(word.hi() - k, t);
    for (long long i = i_lo; i < i_hi; ++i) {
        int b = word.bit(i * t + k);
        if (i < 0)
            deficit += b == 1;
        else
            deficit -= b == 0;
    }
    return deficit;
}

} // namespace

LittlewoodImage decompose(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("decompose: t must be >= 1");
    const AbacusWord word = encode(p);

    LittlewoodImage image;
    image.t = t;
    image.quotient.reserve(static_cast<std::size_t>(t));
    std::vector<long long> deficits(static_cast<std::size_t>(t));

    for (int k = 0; k < t; ++k) {
        const long long i_lo = floor_div(word.lo() - k, t);
        const long long i_hi = ceil_div(word.hi() - k, t);
        std::vector<std::uint8_t> bits;
        bits.reserve(static_cast<std::size_t>(i_hi - i_lo));
        for (long long i = i_lo; i < i_hi; ++i)
            bits.push_back(static_cast<std::uint8_t>(word.bit(i * t + k)));
        deficits[static_cast<std::size_t>(k)] = class_deficit(word, t, k);
        image.quotient.push_back(decode(AbacusWord::canonical(std::move(bits))));
    }

    // Fully reducing 10 -> 01 within a class sorts it: zeros below the
    // boundary -deficit, ones at and above it. Reassembling the sorted
    // classes at their original interlaced positions yields the core word,
    // canonical at the inherited origin.
    std::vector<std::uint8_t> core_bits;
    core_bits.reserve(static_cast<std::size_t>(word.hi() - word.lo()));
    for (long long pos = word.lo(); pos < word.hi(); ++pos) {
        const int k = static_cast<int>(pos - floor_div(pos, t) * t);
        const long long i = floor_div(pos - k, t);
        core_bits.push_back(i >= -deficits[static_cast<std::size_t>(k)] ? 1 : 0);
    }
    image.core = decode(AbacusWord(std::move(core_bits), static_cast<int>(-word.lo())));
    return image;
}

Partition compose(const LittlewoodImage& image) {
    const int t = image.t;
    if (t < 1) throw std::invalid_argument("compose: t must be >= 1");
    if (static_cast<int>(image.quotient.size()) != t)
        throw std::invalid_argument("compose: quotient must have exactly t components");
    if (!is_t_core(image.core, t))
        throw std::invalid_argument("compose: core is not a t-core");

    const AbacusWord core_word = encode(image.core);
    std::vector<long long> shifts(static_cast<std::size_t>(t));
    std::vector<AbacusWord> quotient_words;
    quotient_words.reserve(static_cast<std::size_t>(t));
    long long radius = 1;
    for (int k = 0; k < t; ++k) {
        // A t-core's residue classes are already sorted; the boundary
        // position recovers the shift each quotient word must take.
        shifts[static_cast<std::size_t>(k)] = -class_deficit(core_word, t, k);
        quotient_words.push_back(encode(image.quotient[static_cast<std::size_t>(k)]));
        const AbacusWord& qw = quotient_words.back();
        const long long s = shifts[static_cast<std::size_t>(k)];
        radius = std::max({radius, std::llabs(qw.lo() + s) + 1, std::llabs(qw.hi() + s) + 1});
    }

    const long long abs_lo = -radius * t;
    const long long abs_hi = radius * t;
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(abs_hi - abs_lo));
    for (long long pos = abs_lo; pos < abs_hi; ++pos) {
        const int k = static_cast<int>(pos - floor_div(pos, t) * t);
        const long long i = floor_div(pos - k, t);
        bits.push_back(static_cast<std::uint8_t>(
            quotient_words[static_cast<std::size_t>(k)].bit(i - shifts[static_cast<std::size_t>(k)])));
    }
    return decode(AbacusWord(std::move(bits), static_cast<int>(-abs_lo)));
}

Partition t_core(const Partition& p, int t) { return decompose(p, t).core; }

bool is_t_core(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("is_t_core: t must be >= 1");
    for (int h : p.hook_lengths_desc())
        if (h % t == 0) return false;
    return true;
}

VerificationReport verify_sc_properties(const Partition& p, int t) {
    if (!p.is_self_conjugate())
        throw std::invalid_argument("verify_sc_properties: partition is not self-conjugate");
    VerificationReport report;
    report.target = "sc-properties";
    report.parameters["partition"] = p.to_string();
    report.parameters["t"] = std::to_string(t);

    const LittlewoodImage image = decompose(p, t);
    const auto part_str = [](const Partition& q) { return q.to_string(); };

    if (!image.core.is_self_conjugate() || !is_t_core(image.core, t)) {
        report.fail({"SC1", {}, {}, part_str(image.core), "a self-conjugate t-core"});
        return report;
    }
    for (int j = 0; j < t / 2; ++j) {
        const Partition& left = image.quotient[static_cast<std::size_t>(j)];
        const Partition mirror = image.quotient[static_cast<std::size_t>(t - 1 - j)].conjugate();
        if (left != mirror) {
            report.fail({"SC2", {}, {j}, part_str(left), part_str(mirror)});
            return report;
        }
    }
    if (t % 2 == 1) {
        const Partition& mid = image.quotient[static_cast<std::size_t>((t - 1) / 2)];
        if (!mid.is_self_conjugate()) {
            report.fail({"SC2'", {}, {}, part_str(mid), "a self-conjugate partition"});
            return report;
        }
    }

    long long size_rhs = image.core.size();
    if (t % 2 == 0) {
        for (int i = 0; i < t / 2; ++i)
            size_rhs += 2LL * t * image.quotient[static_cast<std::size_t>(i)].size();
    } else {
        for (int i = 0; i <= (t - 3) / 2; ++i)
            size_rhs += 2LL * t * image.quotient[static_cast<std::size_t>(i)].size();
        size_rhs += static_cast<long long>(t) * image.quotient[static_cast<std::size_t>((t - 1) / 2)].size();
    }
    if (size_rhs != p.size()) {
        report.fail({"SC3", {}, {}, std::to_string(p.size()), std::to_string(size_rhs)});
        return report;
    }

    std::vector<int> lhs_hooks;
    for (int h : p.hook_lengths_desc())
        if (h % t == 0) lhs_hooks.push_back(h);
    std::vector<int> rhs_hooks;
    for (const Partition& nu : image.quotient)
        for (int h : nu.hook_lengths_desc()) rhs_hooks.push_back(t * h);
    std::sort(lhs_hooks.begin(), lhs_hooks.end());
    std::sort(rhs_hooks.begin(), rhs_hooks.end());
    if (lhs_hooks != rhs_hooks) {
        report.fail({"SC4", {}, {}, multiset_to_string(lhs_hooks), multiset_to_string(rhs_hooks)});
        return report;
    }
    return report;
}

} // namespace hooklab
