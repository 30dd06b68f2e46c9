#include <doctest.h>

#include "hooklab/abacus.hpp"

#include <algorithm>
#include <set>

using namespace hooklab;

namespace {
const Partition kLambda{{7, 7, 5, 4, 3, 2, 2}};
}

TEST_CASE("rim encoding matches the worked binary words") {
    CHECK(encode(kLambda).to_string() == "1100101.0101100");
    CHECK(encode(Partition{}).to_string() == ".");
    CHECK(encode(Partition({1})).to_string() == "1.0");
    CHECK(encode(Partition({3, 2, 1})).to_string() == "101.010");
}

TEST_CASE("word parsing, canonicity and decoding") {
    const AbacusWord lambda_word = AbacusWord::parse("1100101.0101100");
    CHECK(decode(lambda_word) == kLambda);
    CHECK(decode(AbacusWord::parse(".")) == Partition{});
    CHECK(decode(AbacusWord::parse("1.0")) == Partition({1}));

    // Untrimmed input normalizes to the same word.
    CHECK(AbacusWord::parse("0001100101.0101100111") == lambda_word);

    // The core row of the worked table decodes to the 4-core.
    CHECK(decode(AbacusWord::parse("101.010")) == Partition({3, 2, 1}));

    // Balance violations are rejected.
    CHECK_THROWS_AS(AbacusWord::parse("10.1"), std::invalid_argument);
    CHECK_THROWS_AS(AbacusWord::parse("1.00"), std::invalid_argument);
    CHECK_THROWS_AS(AbacusWord::parse("110"), std::invalid_argument);  // no dot
    CHECK_THROWS_AS(AbacusWord::parse("1.0x"), std::invalid_argument);
    CHECK_THROWS_AS(AbacusWord::parse("1..0"), std::invalid_argument);

    CHECK(AbacusWord::canonical({1, 0}).to_string() == "1.0");
}

TEST_CASE("word zeros sit at the beta-set positions") {
    // Independent route: in canonical indexing the zeros of the word of
    // lambda are exactly { lambda_j - j : 1 <= j <= l } together with the
    // left tail below -l.
    for (int n = 0; n <= 25; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const AbacusWord word = encode(p);
            std::set<long long> expected;
            for (int j = 1; j <= p.length(); ++j)
                expected.insert(p.parts()[static_cast<std::size_t>(j - 1)] - j);
            std::set<long long> got;
            for (long long pos = word.lo(); pos < word.hi(); ++pos)
                if (word.bit(pos) == 0) got.insert(pos);
            CHECK(word.lo() >= -p.length());
            CHECK(got == expected);
        });
}

TEST_CASE("codec round-trip over all partitions of n <= 30") {
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const AbacusWord word = encode(p);
            CHECK(decode(word) == p);
            CHECK(AbacusWord::parse(word.to_string()) == word);
        });
}

TEST_CASE("Littlewood decomposition of the worked example") {
    const LittlewoodImage image = decompose(kLambda, 4);
    CHECK(image.core == Partition({3, 2, 1}));
    REQUIRE(image.quotient.size() == 4);
    CHECK(image.quotient[0] == Partition{});
    CHECK(image.quotient[1] == Partition({3}));
    CHECK(image.quotient[2] == Partition({1, 1, 1}));
    CHECK(image.quotient[3] == Partition{});
    CHECK(encode(image.core).to_string() == "101.010");

    // H_4(lambda) = 4 H(nu): {12,12,8,8,4,4} against {3,2,1} U {3,2,1}.
    std::vector<int> hooks_div4;
    for (int h : kLambda.hook_lengths_desc())
        if (h % 4 == 0) hooks_div4.push_back(h);
    CHECK(hooks_div4 == std::vector<int>{12, 12, 8, 8, 4, 4});
    std::vector<int> quotient_hooks;
    for (const Partition& nu : image.quotient)
        for (int h : nu.hook_lengths_desc()) quotient_hooks.push_back(4 * h);
    std::sort(quotient_hooks.begin(), quotient_hooks.end(), std::greater<int>());
    CHECK(quotient_hooks == hooks_div4);

    CHECK(compose(image) == kLambda);
}

TEST_CASE("decomposition edge cases") {
    // t = 1: every hook is a multiple of 1.
    const LittlewoodImage t1 = decompose(kLambda, 1);
    CHECK(t1.core == Partition{});
    REQUIRE(t1.quotient.size() == 1);
    CHECK(t1.quotient[0] == kLambda);

    // A t-core is its own core, with an empty quotient.
    const LittlewoodImage core4 = decompose(Partition({3, 2, 1}), 4);
    CHECK(core4.core == Partition({3, 2, 1}));
    for (const Partition& nu : core4.quotient) CHECK(nu.empty());

    const LittlewoodImage empty = decompose(Partition{}, 3);
    CHECK(empty.core == Partition{});
    for (const Partition& nu : empty.quotient) CHECK(nu.empty());

    CHECK_THROWS_AS(decompose(kLambda, 0), std::invalid_argument);
}

TEST_CASE("t-core predicate") {
    CHECK(is_t_core(Partition({3, 2, 1}), 4));
    CHECK_FALSE(is_t_core(kLambda, 4));
    CHECK(is_t_core(Partition{}, 7));
    CHECK(t_core(kLambda, 4) == Partition({3, 2, 1}));
    CHECK(t_core(Partition{}, 5) == Partition{});
    // Idempotence.
    for (int t = 1; t <= 6; ++t) {
        const Partition core = t_core(kLambda, t);
        CHECK(t_core(core, t) == core);
    }
}

TEST_CASE("compose validates its input") {
    LittlewoodImage image;
    image.t = 2;
    image.core = Partition({2, 1, 1}); // hook 4 at the corner: not a 2-core
    image.quotient = {Partition{}, Partition{}};
    CHECK_THROWS_AS(compose(image), std::invalid_argument);

    image.core = Partition{};
    image.quotient = {Partition{}};
    CHECK_THROWS_AS(compose(image), std::invalid_argument); // wrong quotient arity

    image.quotient = {Partition{}, Partition{}};
    CHECK(compose(image) == Partition{});
}

TEST_CASE("bijection round-trip for n <= 12, t <= 5") {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [&](const Partition& p) {
            for (int t = 1; t <= 5; ++t) {
                const LittlewoodImage image = decompose(p, t);
                CHECK(is_t_core(image.core, t));
                CHECK(p.size() == image.core.size() + t * image.quotient_size());
                CHECK(compose(image) == p);
            }
        });
}

TEST_CASE("randomized round-trips at larger sizes") {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> parts;
        int budget = 20 + static_cast<int>(next() >> 33) % 41; // sizes up to ~60
        int max_part = 1 + static_cast<int>(next() >> 33) % 12;
        while (budget > 0) {
            int part = 1 + static_cast<int>(next() >> 33) % max_part;
            part = std::min(part, budget);
            parts.push_back(part);
            budget -= part;
        }
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        const Partition p(parts);
        CHECK(decode(encode(p)) == p);
        for (int t = 2; t <= 10; ++t) {
            const LittlewoodImage image = decompose(p, t);
            CHECK(is_t_core(image.core, t));
            CHECK(p.size() == image.core.size() + t * image.quotient_size());
            CHECK(compose(image) == p);
        }
    }
}

TEST_CASE("self-conjugate properties hold exhaustively for n <= 25, t <= 7") {
    CHECK(verify_sc_properties(kLambda, 4).pass);
    CHECK(verify_sc_properties(Partition{}, 3).pass);
    CHECK_THROWS_AS(verify_sc_properties(Partition({2, 1, 1}), 2), std::invalid_argument);

    for (int n = 0; n <= 25; ++n)
        for_each_self_conjugate(n, [&](const Partition& p) {
            for (int t = 1; t <= 7; ++t) {
                const VerificationReport report = verify_sc_properties(p, t);
                if (!report.pass)
                    FAIL("SC check failed for " << p.to_string() << " t=" << t << ": "
                                                << report.mismatch->property);
            }
        });
}

TEST_CASE("SC2 pairing and middle component") {
    for (int n = 0; n <= 18; ++n)
        for_each_self_conjugate(n, [&](const Partition& p) {
            for (int t = 1; t <= 6; ++t) {
                const LittlewoodImage image = decompose(p, t);
                for (int j = 0; j < t / 2; ++j)
                    CHECK(image.quotient[static_cast<std::size_t>(j)] ==
                          image.quotient[static_cast<std::size_t>(t - 1 - j)].conjugate());
                if (t % 2 == 1)
                    CHECK(image.quotient[static_cast<std::size_t>((t - 1) / 2)].is_self_conjugate());
                // The hook law in counting form: t-hooks of p match 1-hooks
                // across the quotient.
                int quotient_ones = 0;
                for (const Partition& nu : image.quotient) quotient_ones += nu.hook_count(1);
                CHECK(p.hook_count(t) == quotient_ones);
            }
        });
}

TEST_CASE("moduli larger than the window") {
    // (2,1) has hooks {3,1,1}: it is its own 9-core.
    const LittlewoodImage image = decompose(Partition({2, 1}), 9);
    CHECK(image.core == Partition({2, 1}));
    CHECK(image.quotient_size() == 0);
    CHECK(compose(image) == Partition({2, 1}));

    for (int t : {8, 11, 13}) {
        for (int n = 0; n <= 8; ++n)
            for_each_partition(n, [&](const Partition& p) {
                const LittlewoodImage img = decompose(p, t);
                CHECK(is_t_core(img.core, t));
                CHECK(compose(img) == p);
            });
        const LittlewoodImage big = decompose(kLambda, t);
        CHECK(is_t_core(big.core, t));
        CHECK(kLambda.size() == big.core.size() + t * big.quotient_size());
        CHECK(compose(big) == kLambda);
    }
}
