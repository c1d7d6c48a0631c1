#pragma once

// Sequential vs parallel throughput benchmark and its reports.

#include "aesbench/cipher_context.hpp"
#include "aesbench/modes.hpp"
#include "aesbench/parallel_engine.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aesbench {

/// File sizes, in bytes, of the reference sequential/parallel comparison.
inline const std::vector<std::size_t> kDefaultSizeLadder = {1202,   4652,   9302,   18602,  37202,
                                                            74402,  148802, 297602, 595202, 1190402};

/// Published test key and IV, used when none is supplied.
inline constexpr std::string_view kDefaultKeyHex = "2b7e151628aed2a6abf7158809cf4f3c";
inline constexpr std::string_view kDefaultIvHex = "000102030405060708090a0b0c0d0e0f";

enum class BenchPath { sequential, parallel };
enum class ReportFormat { csv, markdown };

std::string_view to_string(BenchPath p) noexcept;

struct BenchRecord
{
    std::size_t size_bytes = 0;
    BenchPath path = BenchPath::sequential;
    Direction operation = Direction::encrypt;
    Mode mode = Mode::ecb;
    std::size_t workers = 1;
    std::size_t granularity = 1;
    std::size_t repetitions = 1;
    double elapsed_seconds = 0.0;
    double throughput_bytes_per_second = 0.0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct RunConfig
{
    CipherKey key{};
    std::optional<IV> iv;  // required for CTR, absent for ECB
    Mode mode = Mode::ecb;
    std::size_t workers = 1;
    std::size_t granularity = 1;
    std::vector<std::size_t> sizes = kDefaultSizeLadder;
    std::vector<Direction> operations = {Direction::encrypt, Direction::decrypt};
    std::size_t repetitions = 5;
    std::size_t warmup = 2;
    std::uint64_t seed = 1;
    ReportFormat format = ReportFormat::csv;
    std::optional<std::filesystem::path> output_path;
};

/// Throws std::invalid_argument (or ClassificationError for a mode the
/// parallel engine cannot run) describing the first problem found.
void validate(const RunConfig& cfg);

/// Deterministic pseudo-random bytes: little-endian mt19937_64 output words.
/// size must be positive.
Bytes generate_input(std::size_t size, std::uint64_t seed);

/// The two implementations under test. Encrypt takes plaintext and returns
/// padded ciphertext; decrypt takes ciphertext and returns the plaintext
/// with padding removed. Both include padding inside the timed region.
struct BenchPaths
{
    using Fn = std::function<Bytes(std::span<const Byte>, Direction)>;
    Fn sequential;
    Fn parallel;
};

BenchPaths default_paths(const RunConfig& cfg, const CipherContext& ctx);

/// The two paths disagreed; nothing was timed.
class BenchmarkMismatch : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// For every size: checks both paths agree, then times warmup + repetitions
/// runs per (path, operation) and keeps the minimum. Records come out ordered
/// by (size, path, operation).
std::vector<BenchRecord> run_benchmark(const RunConfig& cfg);
std::vector<BenchRecord> run_benchmark(const RunConfig& cfg, const BenchPaths& paths);

inline constexpr std::string_view kCsvHeader =
    "size_bytes,path,operation,mode,workers,granularity,repetitions,elapsed_seconds,throughput_bytes_per_second";

/// Sorted by (size, path, operation); header first; LF endings.
std::string to_csv(std::vector<BenchRecord> records);

/// One table per operation: sizes as rows, time and throughput of both
/// paths as columns.
std::string to_markdown(std::vector<BenchRecord> records);

/// Throws std::invalid_argument on malformed input.
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Writes the report. Throws std::invalid_argument for an empty record set
/// and std::runtime_error (naming the path) on I/O failure.
void emit_report(const std::vector<BenchRecord>& records, ReportFormat format, const std::filesystem::path& path);

} // namespace aesbench
