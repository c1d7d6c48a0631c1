#include "aesbench/cipher_context.hpp"

#include <cstring>

namespace aesbench {

namespace {

const TTableSet& standard_tables()
{
    static const TTableSet tables = build_t_tables(standard_sbox());
    return tables;
}

class Fnv1a
{
public:
    template <typename T>
    void update(const T& value) noexcept
    {
        unsigned char bytes[sizeof(T)];
        std::memcpy(bytes, &value, sizeof(T));
        for (unsigned char b : bytes) {
            hash_ ^= b;
            hash_ *= 0x100000001b3ULL;
        }
    }

    std::uint64_t value() const noexcept { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

} // namespace

CipherContext::CipherContext(const CipherKey& key)
    : sbox_(&standard_sbox()),
      mix_(&standard_mix_matrix()),
      expanded_key_(key_expansion(key, *sbox_)),
      inverse_keys_(derive_inverse_round_keys(expanded_key_, *mix_)),
      tables_(standard_tables())
{
}

std::uint64_t CipherContext::fingerprint() const noexcept
{
    Fnv1a h;
    h.update(sbox_->forward);
    h.update(sbox_->inverse);
    h.update(mix_->forward);
    h.update(mix_->inverse);
    h.update(expanded_key_.round_keys);
    h.update(inverse_keys_.round_keys);
    h.update(tables_.encrypt);
    h.update(tables_.decrypt);
    return h.value();
}

} // namespace aesbench
