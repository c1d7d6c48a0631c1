#include "aesbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <string>

namespace aesbench {

std::string_view to_string(BenchPath p) noexcept
{
    return p == BenchPath::sequential ? "sequential" : "parallel";
}

void validate(const RunConfig& cfg)
{
    if (cfg.repetitions < 1)
        throw std::invalid_argument("repetitions must be at least 1");
    if (cfg.workers < 1)
        throw std::invalid_argument("workers must be at least 1");
    if (cfg.granularity < 1)
        throw std::invalid_argument("granularity must be at least 1");
    if (cfg.sizes.empty())
        throw std::invalid_argument("size ladder is empty");
    if (cfg.operations.empty())
        throw std::invalid_argument("no operations selected");
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] == 0)
            throw std::invalid_argument("sizes must be positive");
        if (i > 0 && cfg.sizes[i] <= cfg.sizes[i - 1])
            throw std::invalid_argument("sizes must be strictly increasing");
    }
    if (classify_parallelism(cfg.mode) != Parallelism::suitable)
        throw ClassificationError("mode " + std::string(to_string(cfg.mode)) +
                                  " cannot run on the parallel path; use ecb or ctr");
    if (cfg.mode == Mode::ecb && cfg.iv)
        throw std::invalid_argument("ecb does not take an IV");
    if (cfg.mode == Mode::ctr && !cfg.iv)
        throw std::invalid_argument("ctr requires an IV (counter base)");
}

Bytes generate_input(std::size_t size, std::uint64_t seed)
{
    if (size == 0)
        throw std::invalid_argument("generate_input: size must be positive");
    std::mt19937_64 rng(seed);
    Bytes out(size);
    std::size_t i = 0;
    while (i < size) {
        std::uint64_t word = rng();
        for (int b = 0; b < 8 && i < size; ++b, ++i) {
            out[i] = static_cast<Byte>(word);
            word >>= 8;
        }
    }
    return out;
}

BenchPaths default_paths(const RunConfig& cfg, const CipherContext& ctx)
{
    const Mode mode = cfg.mode;
    const std::optional<IV> iv = cfg.iv;
    const std::size_t workers = cfg.workers;
    const std::size_t granularity = cfg.granularity;
    const CipherContext* c = &ctx;

    BenchPaths paths;
    paths.sequential = [=](std::span<const Byte> data, Direction dir) {
        if (dir == Direction::encrypt)
            return sequential_apply(pad(data), *c, mode, dir, iv);
        return unpad(sequential_apply(data, *c, mode, dir, iv));
    };
    paths.parallel = [=](std::span<const Byte> data, Direction dir) {
        if (dir == Direction::encrypt) {
            const Bytes padded = pad(data);
            const WorkPlan p = plan(padded.size(), workers, granularity, mode, dir);
            return parallel_apply(padded, *c, p, iv);
        }
        const WorkPlan p = plan(data.size(), workers, granularity, mode, dir);
        return unpad(parallel_apply(data, *c, p, iv));
    };
    return paths;
}

std::vector<BenchRecord> run_benchmark(const RunConfig& cfg)
{
    validate(cfg);
    const CipherContext ctx(cfg.key);
    return run_benchmark(cfg, default_paths(cfg, ctx));
}

std::vector<BenchRecord> run_benchmark(const RunConfig& cfg, const BenchPaths& paths)
{
    validate(cfg);
    using Clock = std::chrono::steady_clock;

    std::vector<BenchRecord> records;
    for (std::size_t size : cfg.sizes) {
        const Bytes plaintext = generate_input(size, cfg.seed);

        // Correctness gate: both paths must agree before anything is timed.
        const Bytes ciphertext = paths.sequential(plaintext, Direction::encrypt);
        if (paths.parallel(plaintext, Direction::encrypt) != ciphertext)
            throw BenchmarkMismatch("encryption outputs differ between paths at size " + std::to_string(size));
        if (paths.sequential(ciphertext, Direction::decrypt) != plaintext)
            throw BenchmarkMismatch("sequential decryption does not invert encryption at size " +
                                    std::to_string(size));
        if (paths.parallel(ciphertext, Direction::decrypt) != plaintext)
            throw BenchmarkMismatch("decryption outputs differ between paths at size " + std::to_string(size));

        for (BenchPath path : {BenchPath::sequential, BenchPath::parallel}) {
            const BenchPaths::Fn& fn = path == BenchPath::sequential ? paths.sequential : paths.parallel;
            for (Direction op : {Direction::encrypt, Direction::decrypt}) {
                if (std::find(cfg.operations.begin(), cfg.operations.end(), op) == cfg.operations.end())
                    continue;
                const std::span<const Byte> input = op == Direction::encrypt ? std::span<const Byte>(plaintext)
                                                                             : std::span<const Byte>(ciphertext);
                for (std::size_t w = 0; w < cfg.warmup; ++w)
                    (void)fn(input, op);

                double best = std::numeric_limits<double>::infinity();
                for (std::size_t r = 0; r < cfg.repetitions; ++r) {
                    const auto start = Clock::now();
                    const Bytes result = fn(input, op);
                    const auto stop = Clock::now();
                    if (result.empty())
                        throw BenchmarkMismatch("benchmark path returned no output");
                    best = std::min(best, std::chrono::duration<double>(stop - start).count());
                }
                // steady_clock ticks are at least a nanosecond apart in practice
                best = std::max(best, 1e-9);

                records.push_back(BenchRecord{
                    .size_bytes = size,
                    .path = path,
                    .operation = op,
                    .mode = cfg.mode,
                    .workers = path == BenchPath::sequential ? 1 : cfg.workers,
                    .granularity = path == BenchPath::sequential ? 1 : cfg.granularity,
                    .repetitions = cfg.repetitions,
                    .elapsed_seconds = best,
                    .throughput_bytes_per_second = static_cast<double>(size) / best,
                });
            }
        }
    }
    return records;
}

} // namespace aesbench
