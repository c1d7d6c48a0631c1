#include "aesbench/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <system_error>
#include <tuple>

namespace aesbench {

namespace {

void sort_records(std::vector<BenchRecord>& records)
{
    std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return std::tuple(a.size_bytes, a.path, a.operation) < std::tuple(b.size_bytes, b.path, b.operation);
    });
}

// Shortest representation that parses back to the same double.
std::string format_double(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::string format_fixed(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return fields;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* name)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad " + name + " '" +
                                    std::string(field) + "'");
    return value;
}

} // namespace

std::string to_csv(std::vector<BenchRecord> records)
{
    sort_records(records);
    std::string out(kCsvHeader);
    out += '\n';
    for (const BenchRecord& r : records) {
        out += std::to_string(r.size_bytes);
        out += ',';
        out += to_string(r.path);
        out += ',';
        out += to_string(r.operation);
        out += ',';
        out += to_string(r.mode);
        out += ',';
        out += std::to_string(r.workers);
        out += ',';
        out += std::to_string(r.granularity);
        out += ',';
        out += std::to_string(r.repetitions);
        out += ',';
        out += format_double(r.elapsed_seconds);
        out += ',';
        out += format_double(r.throughput_bytes_per_second);
        out += '\n';
    }
    return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text)
{
    std::vector<BenchRecord> records;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!seen_header) {
            if (line != kCsvHeader)
                throw std::invalid_argument("csv: missing or unexpected header");
            seen_header = true;
            continue;
        }
        if (line.empty())
            continue;

        const auto f = split(line, ',');
        if (f.size() != 9)
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 fields");

        BenchRecord r;
        r.size_bytes = parse_number<std::size_t>(f[0], line_no, "size_bytes");
        if (f[1] == "sequential")
            r.path = BenchPath::sequential;
        else if (f[1] == "parallel")
            r.path = BenchPath::parallel;
        else
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad path");
        if (f[2] == "encrypt")
            r.operation = Direction::encrypt;
        else if (f[2] == "decrypt")
            r.operation = Direction::decrypt;
        else
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad operation");
        const auto mode = parse_mode(f[3]);
        if (!mode)
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad mode");
        r.mode = *mode;
        r.workers = parse_number<std::size_t>(f[4], line_no, "workers");
        r.granularity = parse_number<std::size_t>(f[5], line_no, "granularity");
        r.repetitions = parse_number<std::size_t>(f[6], line_no, "repetitions");
        r.elapsed_seconds = parse_number<double>(f[7], line_no, "elapsed_seconds");
        r.throughput_bytes_per_second = parse_number<double>(f[8], line_no, "throughput_bytes_per_second");
        records.push_back(r);
    }
    if (!seen_header)
        throw std::invalid_argument("csv: empty input");
    return records;
}

std::string to_markdown(std::vector<BenchRecord> records)
{
    sort_records(records);
    std::string out;
    for (Direction op : {Direction::encrypt, Direction::decrypt}) {
        // size -> (sequential, parallel)
        std::map<std::size_t, std::pair<const BenchRecord*, const BenchRecord*>> rows;
        for (const BenchRecord& r : records) {
            if (r.operation != op)
                continue;
            auto& slot = rows[r.size_bytes];
            (r.path == BenchPath::sequential ? slot.first : slot.second) = &r;
        }
        if (rows.empty())
            continue;

        if (!out.empty())
            out += '\n';
        out += op == Direction::encrypt ? "### Encryption" : "### Decryption";
        out += " (" + std::string(to_string(records.front().mode)) + ")\n\n";
        out += "| File Size (bytes) | Sequential time (s) | Parallel time (s) "
               "| Sequential throughput (B/s) | Parallel throughput (B/s) |\n";
        out += "|---:|---:|---:|---:|---:|\n";
        auto cell = [](const BenchRecord* r, bool time) {
            if (!r)
                return std::string("-");
            return time ? format_fixed(r->elapsed_seconds, 6) : format_fixed(r->throughput_bytes_per_second, 2);
        };
        for (const auto& [size, pair] : rows) {
            out += "| " + std::to_string(size) + " | " + cell(pair.first, true) + " | " + cell(pair.second, true) +
                   " | " + cell(pair.first, false) + " | " + cell(pair.second, false) + " |\n";
        }
    }
    return out;
}

void emit_report(const std::vector<BenchRecord>& records, ReportFormat format, const std::filesystem::path& path)
{
    if (records.empty())
        throw std::invalid_argument("emit_report: no records");
    const std::string text = format == ReportFormat::csv ? to_csv(records) : to_markdown(records);

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.close();
    if (!file)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

} // namespace aesbench
