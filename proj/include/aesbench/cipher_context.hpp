#pragma once

#include "aesbench/aes_core.hpp"
#include "aesbench/ttables.hpp"

#include <cstdint>

namespace aesbench {

/// Everything a worker needs to process a block under one key. Built once,
/// then only ever read; any number of threads may share one instance.
class CipherContext
{
public:
    explicit CipherContext(const CipherKey& key);

    const TTableSet& tables() const noexcept { return tables_; }
    const ExpandedKey& expanded_key() const noexcept { return expanded_key_; }
    const InverseRoundKeys& inverse_round_keys() const noexcept { return inverse_keys_; }
    const SBox& sbox() const noexcept { return *sbox_; }
    const MixMatrix& mix() const noexcept { return *mix_; }

    /// Fast path used by every mode.
    Block encrypt(const Block& block) const noexcept
    {
        return ttable_encrypt_block(block, expanded_key_, tables_, *sbox_);
    }

    Block decrypt(const Block& block) const noexcept
    {
        return ttable_decrypt_block(block, inverse_keys_, tables_, *sbox_);
    }

    /// FNV-1a over every byte the context owns or references.
    std::uint64_t fingerprint() const noexcept;

private:
    const SBox* sbox_;
    const MixMatrix* mix_;
    ExpandedKey expanded_key_;
    InverseRoundKeys inverse_keys_;
    TTableSet tables_;
};

} // namespace aesbench
