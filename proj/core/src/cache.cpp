#include "zetalab/cache.hpp"

#include <bit>
#include <cstring>

static_assert(std::endian::native == std::endian::little,
              "cache files are little-endian; add byte swapping for this target");

namespace zetalab::cache {

Writer::Writer(const std::filesystem::path& file, const char magic[9], std::uint32_t version)
    : out_(file, std::ios::binary | std::ios::trunc), path_(file) {
    if (!out_) throw CacheError("cache: cannot open for writing: " + file.string());
    out_.write(magic, 8);
    write_u32(version);
}

void Writer::write_u32(std::uint32_t v) { out_.write(reinterpret_cast<const char*>(&v), 4); }
void Writer::write_u64(std::uint64_t v) { out_.write(reinterpret_cast<const char*>(&v), 8); }
void Writer::write_f64(double v) { out_.write(reinterpret_cast<const char*>(&v), 8); }

void Writer::write_u32_array(const std::uint32_t* data, std::size_t n) {
    out_.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * 4));
}

void Writer::write_f64_array(const double* data, std::size_t n) {
    out_.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * 8));
}

void Writer::finish() {
    out_.flush();
    if (!out_) throw CacheError("cache: write failed: " + path_.string());
    out_.close();
}

Reader::Reader(const std::filesystem::path& file, const char magic[9], std::uint32_t version)
    : in_(file, std::ios::binary), path_(file) {
    if (!in_) throw CacheError("cache: cannot open: " + file.string());
    char got[8];
    in_.read(got, 8);
    if (!in_ || std::memcmp(got, magic, 8) != 0)
        throw CacheError("cache: bad magic in " + file.string());
    const std::uint32_t v = read_u32();
    if (v != version)
        throw CacheError("cache: unsupported version " + std::to_string(v) + " in " + file.string());
}

std::uint32_t Reader::read_u32() {
    std::uint32_t v = 0;
    in_.read(reinterpret_cast<char*>(&v), 4);
    if (!in_) throw CacheError("cache: truncated file: " + path_.string());
    return v;
}

std::uint64_t Reader::read_u64() {
    std::uint64_t v = 0;
    in_.read(reinterpret_cast<char*>(&v), 8);
    if (!in_) throw CacheError("cache: truncated file: " + path_.string());
    return v;
}

double Reader::read_f64() {
    double v = 0;
    in_.read(reinterpret_cast<char*>(&v), 8);
    if (!in_) throw CacheError("cache: truncated file: " + path_.string());
    return v;
}

void Reader::read_u32_array(std::uint32_t* data, std::size_t n) {
    in_.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n * 4));
    if (!in_) throw CacheError("cache: truncated file: " + path_.string());
}

void Reader::read_f64_array(double* data, std::size_t n) {
    in_.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n * 8));
    if (!in_) throw CacheError("cache: truncated file: " + path_.string());
}

void Reader::expect_eof() {
    in_.peek();
    if (!in_.eof()) throw CacheError("cache: trailing data in " + path_.string());
}

}  // namespace zetalab::cache
