#include "aesbench/aes_core.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace aesbench;
using namespace aesbench::testing;

namespace {

// Bitwise form of the affine map: b'_i = b_i ^ b_{i+4} ^ b_{i+5} ^ b_{i+6} ^ b_{i+7} ^ c_i.
std::uint8_t oracle_sbox(std::uint8_t a)
{
    std::uint8_t inv = 0;
    if (a != 0) {
        for (unsigned b = 1; b < 256; ++b)
            if (oracle_mul(a, static_cast<std::uint8_t>(b)) == 1)
                inv = static_cast<std::uint8_t>(b);
    }
    std::uint8_t out = 0;
    for (int i = 0; i < 8; ++i) {
        const int bit = ((inv >> i) ^ (inv >> ((i + 4) % 8)) ^ (inv >> ((i + 5) % 8)) ^ (inv >> ((i + 6) % 8)) ^
                         (inv >> ((i + 7) % 8)) ^ (0x63 >> i)) & 1;
        out |= static_cast<std::uint8_t>(bit << i);
    }
    return out;
}

State random_state(Rng& rng)
{
    return State::from_block(rng.block());
}

const Block kKatKey = hex_block("000102030405060708090a0b0c0d0e0f");
const Block kKatPlain = hex_block("00112233445566778899aabbccddeeff");
const Block kKatCipher = hex_block("69c4e0d86a7b0430d8cdb78070b4c55a");

} // namespace

TEST_CASE("state uses the column-major byte mapping")
{
    Block b;
    for (std::size_t k = 0; k < 16; ++k)
        b[k] = static_cast<Byte>(k);
    const State s = State::from_block(b);
    for (std::size_t k = 0; k < 16; ++k)
        CHECK(s.at(k % 4, k / 4) == k);
    CHECK(s.to_block() == b);

    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const Block r = rng.block();
        REQUIRE(State::from_block(r).to_block() == r);
    }
}

TEST_CASE("sbox")
{
    const SBox sbox = build_sbox();
    CHECK(sbox.forward[0x00] == 0x63);
    CHECK(sbox.forward[0x53] == 0xED);
    for (unsigned a = 0; a < 256; ++a) {
        REQUIRE(sbox.forward[a] == oracle_sbox(static_cast<std::uint8_t>(a)));
        REQUIRE(sbox.inverse[sbox.forward[a]] == a);
    }
    const std::set<Byte> image(sbox.forward.begin(), sbox.forward.end());
    CHECK(image.size() == 256);
    CHECK(standard_sbox().forward == sbox.forward);
}

TEST_CASE("sub_bytes")
{
    const SBox& sbox = standard_sbox();
    const State zero;
    const State subbed = sub_bytes(zero, sbox);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(subbed.at(r, c) == 0x63);

    State probe;
    probe.at(0, 0) = 0x53;
    const State p = sub_bytes(probe, sbox);
    CHECK(p.at(0, 0) == 0xED);
    CHECK(p.at(1, 0) == 0x63);
    CHECK(p.at(3, 3) == 0x63);

    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        const State s = random_state(rng);
        REQUIRE(inv_sub_bytes(sub_bytes(s, sbox), sbox) == s);
    }
}

TEST_CASE("shift_rows")
{
    State s;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            s.at(r, c) = static_cast<Byte>(16 * r + c);
    const State t = shift_rows(s);
    for (std::size_t c = 0; c < 4; ++c)
        CHECK(t.at(0, c) == s.at(0, c));
    // row 1: [a,b,c,d] -> [b,c,d,a]
    CHECK(t.at(1, 0) == s.at(1, 1));
    CHECK(t.at(1, 1) == s.at(1, 2));
    CHECK(t.at(1, 2) == s.at(1, 3));
    CHECK(t.at(1, 3) == s.at(1, 0));

    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const State x = random_state(rng);
        REQUIRE(shift_rows(shift_rows(shift_rows(shift_rows(x)))) == x);
        REQUIRE(inv_shift_rows(shift_rows(x)) == x);
        const State y = shift_rows(x);
        for (std::size_t r = 0; r < 4; ++r) {
            std::multiset<Byte> before, after;
            for (std::size_t c = 0; c < 4; ++c) {
                before.insert(x.at(r, c));
                after.insert(y.at(r, c));
            }
            REQUIRE(before == after);
        }
    }
}

TEST_CASE("mix matrix inverse")
{
    const MixMatrix& m = standard_mix_matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Byte acc = 0;
            for (std::size_t k = 0; k < 4; ++k)
                acc ^= oracle_mul(m.forward[i][k], m.inverse[k][j]);
            CHECK(acc == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("mix_columns")
{
    const MixMatrix& m = standard_mix_matrix();

    State ones;
    for (std::size_t r = 0; r < 4; ++r)
        ones.at(r, 0) = 0x01;
    CHECK(mix_columns(ones, m).at(0, 0) == 0x01);
    CHECK(mix_columns(ones, m).at(3, 0) == 0x01);

    // Oracle first, then the frozen value.
    const std::array<Byte, 4> column = {0xDB, 0x13, 0x53, 0x45};
    const auto expected = oracle_matvec(m.forward, column);
    CHECK(expected == std::array<Byte, 4>{0x8E, 0x4D, 0xA1, 0xBC});
    State s;
    for (std::size_t r = 0; r < 4; ++r)
        s.at(r, 2) = column[r];
    const State t = mix_columns(s, m);
    for (std::size_t r = 0; r < 4; ++r)
        CHECK(t.at(r, 2) == expected[r]);

    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        const State x = random_state(rng);
        REQUIRE(inv_mix_columns(mix_columns(x, m), m) == x);

        // Perturbing one input column only changes that output column.
        State y = x;
        const std::size_t col = rng.below(4);
        y.at(rng.below(4), col) ^= static_cast<Byte>(1 + rng.below(255));
        const State mx = mix_columns(x, m);
        const State my = mix_columns(y, m);
        for (std::size_t c = 0; c < 4; ++c) {
            bool same = true;
            for (std::size_t r = 0; r < 4; ++r)
                same = same && mx.at(r, c) == my.at(r, c);
            REQUIRE(same == (c != col));
        }
    }
}

TEST_CASE("add_round_key")
{
    Rng rng(5);
    const Block zero{};
    for (int i = 0; i < 200; ++i) {
        const State s = random_state(rng);
        const Block k = rng.block();
        REQUIRE(add_round_key(s, zero) == s);
        REQUIRE(add_round_key(add_round_key(s, k), k) == s);
        REQUIRE(add_round_key(State{}, k).to_block() == k);
    }
}

TEST_CASE("key_expansion")
{
    const SBox& sbox = standard_sbox();
    const CipherKey key{hex_block("2b7e151628aed2a6abf7158809cf4f3c")};
    const ExpandedKey ek = key_expansion(key, sbox);
    CHECK(ek.round_keys[0] == key.bytes);
    CHECK(ek.round_keys[1] == hex_block("a0fafe1788542cb123a339392a6c7605"));
    CHECK(ek.round_keys[10] == hex_block("d014f9a8c9ee2589e13f0cc8b6630ca6"));
    CHECK(ExpandedKey::size_bits() == 1408);
    CHECK(sizeof(ek.round_keys) == 176);
}

TEST_CASE("encrypt/decrypt known answers")
{
    const SBox& sbox = standard_sbox();
    const MixMatrix& m = standard_mix_matrix();
    const ExpandedKey ek = key_expansion(CipherKey{kKatKey}, sbox);
    CHECK(encrypt_block(kKatPlain, ek, sbox, m) == kKatCipher);
    CHECK(decrypt_block(kKatCipher, ek, sbox, m) == kKatPlain);

    // Values from an independent AES implementation.
    const ExpandedKey zero_key = key_expansion(CipherKey{}, sbox);
    CHECK(encrypt_block(Block{}, zero_key, sbox, m) == hex_block("66e94bd4ef8a2c3b884cfa59ca342b2e"));
    CHECK(decrypt_block(Block{}, zero_key, sbox, m) == hex_block("140f0f1011b5223d79587717ffd9ec3a"));
}

TEST_CASE("encrypt/decrypt round-trip")
{
    const SBox& sbox = standard_sbox();
    const MixMatrix& m = standard_mix_matrix();
    Rng rng(6);
    for (int i = 0; i < 10000; ++i) {
        const ExpandedKey ek = key_expansion(CipherKey{rng.block()}, sbox);
        const Block b = rng.block();
        REQUIRE(decrypt_block(encrypt_block(b, ek, sbox, m), ek, sbox, m) == b);
    }
}

TEST_CASE("avalanche")
{
    const SBox& sbox = standard_sbox();
    const MixMatrix& m = standard_mix_matrix();
    Rng rng(7);
    constexpr int kTrials = 1000;
    long total = 0;
    for (int i = 0; i < kTrials; ++i) {
        const ExpandedKey ek = key_expansion(CipherKey{rng.block()}, sbox);
        Block b = rng.block();
        const Block c0 = encrypt_block(b, ek, sbox, m);
        const std::size_t bit = rng.below(128);
        b[bit / 8] ^= static_cast<Byte>(1u << (bit % 8));
        total += popcount_diff(c0, encrypt_block(b, ek, sbox, m));
    }
    const double mean = static_cast<double>(total) / kTrials;
    CHECK(mean >= 40.0);
    CHECK(mean <= 88.0);
}
