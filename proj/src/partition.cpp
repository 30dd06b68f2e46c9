#include "hooklab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace hooklab {

namespace {

int checked_sum(const std::vector<int>& parts) {
    long long total = 0;
    for (int p : parts) total += p;
    if (total > std::numeric_limits<int>::max())
        throw std::invalid_argument("Partition: size overflow");
    return static_cast<int>(total);
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
    size_ = checked_sum(parts_);
}

Partition::Partition(Trusted, std::vector<int> parts) : parts_(std::move(parts)) {
    size_ = checked_sum(parts_);
}

Partition Partition::parse(std::string_view text) {
    if (text == "-") return Partition{};
    if (text.empty()) throw std::invalid_argument("Partition::parse: empty string (use \"-\")");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("Partition::parse: bad token '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]));
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(Trusted{}, std::move(conj));
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

std::vector<int> Partition::hook_lengths_desc() const {
    const Partition conj = conjugate();
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= length(); ++i) {
        for (int j = 1; j <= parts_[i - 1]; ++j) {
            // arm + leg + 1
            hooks.push_back(parts_[i - 1] - j + conj.parts_[j - 1] - i + 1);
        }
    }
    std::sort(hooks.begin(), hooks.end(), std::greater<int>());
    return hooks;
}

std::map<int, int> Partition::hook_multiset() const {
    std::map<int, int> counts;
    for (int h : hook_lengths_desc()) ++counts[h];
    return counts;
}

int Partition::hook_count(int t) const {
    if (t < 1) throw std::invalid_argument("hook_count: t must be >= 1");
    if (parts_.empty()) return 0;
    const Partition conj = conjugate();
    int count = 0;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j)
            if (parts_[i - 1] - j + conj.parts_[j - 1] - i + 1 == t) ++count;
    return count;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

ScSplit sc_split(const Partition& p) {
    if (p.empty())
        throw std::invalid_argument("sc_split: empty partition has no Durfee square");
    if (!p.is_self_conjugate())
        throw std::invalid_argument("sc_split: partition is not self-conjugate");
    const auto& parts = p.parts();
    int durfee = 0;
    while (durfee < p.length() && parts[static_cast<std::size_t>(durfee)] >= durfee + 1) ++durfee;
    std::vector<int> twin(parts.begin() + durfee, parts.end());
    ScSplit split;
    split.durfee = durfee;
    split.type = (!twin.empty() && twin.front() == durfee) ? ScType::type2 : ScType::type1;
    split.twin = Partition(std::move(twin));
    return split;
}

Partition sc_reassemble(const ScSplit& split) {
    if (split.durfee < 1) throw std::invalid_argument("sc_reassemble: durfee must be >= 1");
    const int d = split.durfee;
    if (!split.twin.empty() && split.twin.parts().front() > d)
        throw std::invalid_argument("sc_reassemble: twin part exceeds Durfee side");
    const Partition twin_conj = split.twin.conjugate();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(d + split.twin.length()));
    for (int i = 1; i <= d; ++i) {
        int right = i <= twin_conj.length() ? twin_conj.parts()[static_cast<std::size_t>(i - 1)] : 0;
        parts.push_back(d + right);
    }
    for (int part : split.twin.parts()) parts.push_back(part);
    return Partition(std::move(parts));
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> self_conjugate_partitions(int n) {
    std::vector<Partition> out;
    for_each_self_conjugate(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

mpz_class count_distinct_odd(int n) {
    if (n < 0) throw std::invalid_argument("count_distinct_odd: n must be >= 0");
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int m = n; m >= part; --m)
            ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
    return ways[static_cast<std::size_t>(n)];
}

mpz_class count_self_conjugate(int n) {
    mpz_class count = 0;
    for_each_self_conjugate(n, [&](const Partition&) { ++count; });
    return count;
}

mpz_class a_star_oracle(int t, int n) {
    if (t < 1) throw std::invalid_argument("a_star_oracle: t must be >= 1");
    if (n < 0) throw std::invalid_argument("a_star_oracle: n must be >= 0");
    mpz_class total = 0;
    for_each_self_conjugate(n, [&](const Partition& p) { total += p.hook_count(t); });
    return total;
}

} // namespace hooklab
