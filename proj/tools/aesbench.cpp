// aesbench: file encryption, self test and the sequential vs parallel
// throughput benchmark.

#include "aesbench/bench.hpp"
#include "aesbench/hex.hpp"
#include "aesbench/modes.hpp"
#include "aesbench/selftest.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <thread>

namespace fs = std::filesystem;
using namespace aesbench;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,          // selftest failed or unexpected error
    kUsage = 2,            // command line did not parse
    kBadKeyMaterial = 3,   // key/IV missing or not 32 hex digits
    kIoError = 4,
    kCorruption = 5,       // padding check failed while decrypting
    kBenchMismatch = 6,    // sequential and parallel outputs differ
    kNotParallel = 7,      // bench asked for a chaining mode
    kBadConfig = 8,        // bench parameters out of range
};

struct UsageFailure
{
    int code;
    std::string message;
};

std::optional<std::string> from_env(const char* name)
{
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0')
        return std::nullopt;
    return std::string(v);
}

Block decode_or_fail(const std::string& hex, const char* what)
{
    const auto block = parse_hex_block(hex);
    if (!block)
        throw UsageFailure{kBadKeyMaterial, std::string(what) + " must be exactly 32 hex digits"};
    return *block;
}

/// Flag, then environment, then fallback.
std::optional<Block> resolve_block(const std::string& flag, const char* env, const char* what,
                                   std::optional<std::string_view> fallback)
{
    if (!flag.empty())
        return decode_or_fail(flag, what);
    if (auto v = from_env(env))
        return decode_or_fail(*v, what);
    if (fallback)
        return decode_or_fail(std::string(*fallback), what);
    return std::nullopt;
}

Mode parse_mode_or_fail(const std::string& name)
{
    const auto mode = parse_mode(name);
    if (!mode)
        throw UsageFailure{kUsage, "unknown mode '" + name + "'"};
    return *mode;
}

Bytes read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::system_error(errno, std::generic_category(), "cannot open '" + path.string() + "'");
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::system_error(errno, std::generic_category(), "failed reading '" + path.string() + "'");
    return data;
}

void write_file(const fs::path& path, const Bytes& data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::system_error(errno, std::generic_category(), "cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.close();
    if (!out)
        throw std::system_error(errno, std::generic_category(), "failed writing '" + path.string() + "'");
}

fs::path default_output(const fs::path& input, Direction dir)
{
    if (dir == Direction::encrypt)
        return fs::path(input.string() + ".enc");
    if (input.extension() == ".enc")
        return fs::path(input).replace_extension(".dec");
    return fs::path(input.string() + ".dec");
}

struct FileOptions
{
    std::string input;
    std::string output;
    std::string mode = "ecb";
    std::string key;
    std::string iv;
};

int run_file(const FileOptions& opt, Direction dir)
{
    const Mode mode = parse_mode_or_fail(opt.mode);
    const auto key = resolve_block(opt.key, "AES_BENCH_KEY", "key", std::nullopt);
    if (!key)
        throw UsageFailure{kBadKeyMaterial, "no key given (use --key or AES_BENCH_KEY)"};

    std::optional<IV> iv;
    if (mode == Mode::ecb) {
        if (!opt.iv.empty())
            std::cerr << "note: ecb ignores --iv\n";
    } else {
        const auto block = resolve_block(opt.iv, "AES_BENCH_IV", "iv", std::nullopt);
        if (!block)
            throw UsageFailure{kBadKeyMaterial, std::string(to_string(mode)) + " needs --iv or AES_BENCH_IV"};
        iv = IV{*block};
    }

    const fs::path input(opt.input);
    const fs::path output = opt.output.empty() ? default_output(input, dir) : fs::path(opt.output);
    const CipherContext ctx(CipherKey{*key});
    const Bytes data = read_file(input);
    const Bytes result =
        dir == Direction::encrypt ? encrypt_message(mode, data, ctx, iv) : decrypt_message(mode, data, ctx, iv);
    write_file(output, result);
    std::cerr << to_string(dir) << "ed " << data.size() << " -> " << result.size() << " bytes: " << output.string()
              << '\n';
    return kOk;
}

struct BenchOptions
{
    std::string mode = "ecb";
    std::string op;
    std::string key;
    std::string iv;
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t granularity = 1;
    std::vector<std::size_t> sizes;
    std::size_t reps = 5;
    std::size_t warmup = 2;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
};

int run_bench(const BenchOptions& opt)
{
    RunConfig cfg;
    cfg.mode = parse_mode_or_fail(opt.mode);
    cfg.key = CipherKey{*resolve_block(opt.key, "AES_BENCH_KEY", "key", kDefaultKeyHex)};
    if (cfg.mode != Mode::ecb)
        cfg.iv = IV{*resolve_block(opt.iv, "AES_BENCH_IV", "iv", kDefaultIvHex)};
    cfg.workers = opt.workers;
    cfg.granularity = opt.granularity;
    if (!opt.sizes.empty())
        cfg.sizes = opt.sizes;
    if (opt.op == "encrypt")
        cfg.operations = {Direction::encrypt};
    else if (opt.op == "decrypt")
        cfg.operations = {Direction::decrypt};
    cfg.repetitions = opt.reps;
    cfg.warmup = opt.warmup;
    cfg.seed = opt.seed;
    cfg.format = opt.format == "markdown" ? ReportFormat::markdown : ReportFormat::csv;
    if (!opt.out.empty())
        cfg.output_path = fs::path(opt.out);

    try {
        validate(cfg);
    } catch (const ClassificationError& e) {
        throw UsageFailure{kNotParallel, e.what()};
    } catch (const std::invalid_argument& e) {
        throw UsageFailure{kBadConfig, e.what()};
    }

    const auto records = run_benchmark(cfg);
    if (cfg.output_path) {
        try {
            emit_report(records, cfg.format, *cfg.output_path);
        } catch (const std::runtime_error& e) {
            throw UsageFailure{kIoError, e.what()};
        }
        std::cerr << "wrote " << records.size() << " records to " << cfg.output_path->string() << '\n';
    } else {
        std::cout << (cfg.format == ReportFormat::csv ? to_csv(records) : to_markdown(records));
    }
    return kOk;
}

void add_file_command(CLI::App& app, const char* name, const char* desc, FileOptions& opt)
{
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("input", opt.input, "Input file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.output, "Output path (default: beside the input)");
    cmd->add_option("--mode", opt.mode, "Block cipher mode")
        ->check(CLI::IsMember({"ecb", "cbc", "cfb", "ofb", "ctr"}, CLI::ignore_case));
    cmd->add_option("--key", opt.key, "Key, 32 hex digits (falls back to AES_BENCH_KEY)");
    cmd->add_option("--iv", opt.iv, "IV or counter base, 32 hex digits (falls back to AES_BENCH_IV)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"AES-128 with a T-table fast path, five modes and a parallel throughput benchmark"};
    app.require_subcommand(1);

    FileOptions enc_opt, dec_opt;
    add_file_command(app, "encrypt-file", "Encrypt a file", enc_opt);
    add_file_command(app, "decrypt-file", "Decrypt a file", dec_opt);

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "Time sequential vs parallel encryption and decryption");
    bench->add_option("--mode", bench_opt.mode, "ecb or ctr")
        ->check(CLI::IsMember({"ecb", "cbc", "cfb", "ofb", "ctr"}, CLI::ignore_case));
    bench->add_option("--op", bench_opt.op, "Only time this operation (default: both)")
        ->check(CLI::IsMember({"encrypt", "decrypt"}));
    bench->add_option("--key", bench_opt.key, "Key, 32 hex digits");
    bench->add_option("--iv", bench_opt.iv, "Counter base for ctr, 32 hex digits");
    bench->add_option("--workers", bench_opt.workers, "Parallel worker threads")->capture_default_str();
    bench->add_option("--granularity", bench_opt.granularity, "States per task")->capture_default_str();
    bench->add_option("--sizes", bench_opt.sizes, "Comma-separated input sizes in bytes")->delimiter(',');
    bench->add_option("--reps", bench_opt.reps, "Timed repetitions per measurement")->capture_default_str();
    bench->add_option("--warmup", bench_opt.warmup, "Untimed warmup runs")->capture_default_str();
    bench->add_option("--seed", bench_opt.seed, "Input generator seed")->capture_default_str();
    bench->add_option("--format", bench_opt.format, "csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}))
        ->capture_default_str();
    bench->add_option("--out", bench_opt.out, "Report path (default: stdout)");

    CLI::App* selftest = app.add_subcommand("selftest", "Run known-answer and differential checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand("encrypt-file"))
            return run_file(enc_opt, Direction::encrypt);
        if (app.got_subcommand("decrypt-file"))
            return run_file(dec_opt, Direction::decrypt);
        if (bench->parsed())
            return run_bench(bench_opt);
        if (selftest->parsed())
            return run_selftest(std::cout) ? kOk : kFailure;
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const CorruptionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCorruption;
    } catch (const BenchmarkMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBenchMismatch;
    } catch (const std::system_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
