#include "aesbench/selftest.hpp"

#include "aesbench/aes_core.hpp"
#include "aesbench/cipher_context.hpp"
#include "aesbench/gf256.hpp"
#include "aesbench/hex.hpp"
#include "aesbench/modes.hpp"
#include "aesbench/ttables.hpp"

#include <ostream>
#include <random>
#include <string>

namespace aesbench {

namespace {

Block hex_block(std::string_view hex)
{
    return *parse_hex_block(hex);
}

Bytes hex_bytes(std::string_view hex)
{
    Bytes out;
    for (std::size_t i = 0; i < hex.size(); i += 32) {
        const Block b = hex_block(hex.substr(i, 32));
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

class Checker
{
public:
    explicit Checker(std::ostream& log) : log_(log) {}

    void check(bool ok, std::string_view name)
    {
        log_ << (ok ? "[ ok ] " : "[FAIL] ") << name << '\n';
        all_ok_ = all_ok_ && ok;
    }

    bool all_ok() const { return all_ok_; }

private:
    std::ostream& log_;
    bool all_ok_ = true;
};

} // namespace

bool run_selftest(std::ostream& log)
{
    Checker c(log);

    c.check(gf256::mul(0x57, 0x83) == 0xC1 && gf256::xtime(0x57) == 0xAE, "gf256 worked example");

    const SBox& sbox = standard_sbox();
    const MixMatrix& mix = standard_mix_matrix();
    const TTableSet tables = build_t_tables(sbox);

    // FIPS-197 appendix C.1
    const Block pt = hex_block("00112233445566778899aabbccddeeff");
    const Block ct = hex_block("69c4e0d86a7b0430d8cdb78070b4c55a");
    const ExpandedKey ek = key_expansion(CipherKey{hex_block("000102030405060708090a0b0c0d0e0f")}, sbox);
    c.check(encrypt_block(pt, ek, sbox, mix) == ct, "reference encrypt known answer");
    c.check(decrypt_block(ct, ek, sbox, mix) == pt, "reference decrypt known answer");
    c.check(ttable_encrypt_block(pt, ek, tables, sbox) == ct, "t-table encrypt known answer");
    c.check(ttable_decrypt_block(ct, ek, tables, sbox) == pt, "t-table decrypt known answer");

    std::mt19937_64 rng(0x5eed);
    auto random_block = [&rng] {
        Block b;
        for (Byte& x : b)
            x = static_cast<Byte>(rng());
        return b;
    };

    bool differential_ok = true;
    for (int i = 0; i < 2000 && differential_ok; ++i) {
        const ExpandedKey k = key_expansion(CipherKey{random_block()}, sbox);
        const InverseRoundKeys dk = derive_inverse_round_keys(k, mix);
        const Block b = random_block();
        differential_ok = ttable_encrypt_block(b, k, tables, sbox) == encrypt_block(b, k, sbox, mix) &&
                          ttable_decrypt_block(b, dk, tables, sbox) == decrypt_block(b, k, sbox, mix);
    }
    c.check(differential_ok, "t-table vs reference differential (2000 pairs)");

    // NIST SP 800-38A, first two blocks of F.2.1, F.3.13, F.4.1, F.5.1
    const CipherContext nist(CipherKey{hex_block("2b7e151628aed2a6abf7158809cf4f3c")});
    const IV nist_iv{hex_block("000102030405060708090a0b0c0d0e0f")};
    const Bytes nist_pt = hex_bytes("6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51");
    c.check(cbc_encrypt(nist_pt, nist_iv, nist) ==
                hex_bytes("7649abac8119b246cee98e9b12e9197d5086cb9b507219ee95db113a917678b2"),
            "cbc known answer");
    c.check(cfb_encrypt(nist_pt, nist_iv, nist) ==
                hex_bytes("3b3fd92eb72dad20333449f8e83cfb4ac8a64537a0b3a93fcde3cdad9f1ce58b"),
            "cfb known answer");
    c.check(ofb_encrypt(nist_pt, nist_iv, nist) ==
                hex_bytes("3b3fd92eb72dad20333449f8e83cfb4a7789508d16918f03f53c52dac54ed825"),
            "ofb known answer");
    c.check(ctr_encrypt(nist_pt, Counter{hex_block("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff")}, nist) ==
                hex_bytes("874d6191b620e3261bef6864990db6ce9806f66b7970fdff8617187bb9fffdff"),
            "ctr known answer");

    const CipherContext ctx(CipherKey{random_block()});
    const IV iv{random_block()};
    for (Mode mode : kAllModes) {
        bool ok = true;
        for (std::size_t len : {0, 1, 15, 16, 17, 1202}) {
            Bytes msg(len);
            for (Byte& x : msg)
                x = static_cast<Byte>(rng());
            const std::optional<IV> mode_iv = mode == Mode::ecb ? std::nullopt : std::optional<IV>(iv);
            const Bytes enc = encrypt_message(mode, msg, ctx, mode_iv);
            ok = ok && enc.size() == (len / 16 + 1) * 16 && decrypt_message(mode, enc, ctx, mode_iv) == msg;
        }
        c.check(ok, std::string(to_string(mode)) + " round-trip");
    }

    log << (c.all_ok() ? "selftest passed\n" : "selftest FAILED\n");
    return c.all_ok();
}

} // namespace aesbench
