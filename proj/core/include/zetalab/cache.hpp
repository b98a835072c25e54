#pragma once

// Little-endian binary cache files with an 8-byte magic and a u32 version.
// A bad magic or version is reported as CacheError; callers never silently
// rebuild over a corrupt file.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace zetalab::cache {

inline constexpr char kDivisorMagic[9] = "DIVTBL01";
inline constexpr char kGridMagic[9] = "ZETGRD01";
inline constexpr std::uint32_t kFormatVersion = 1;

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Writer {
public:
    Writer(const std::filesystem::path& file, const char magic[9], std::uint32_t version);
    void write_u32(std::uint32_t v);
    void write_u64(std::uint64_t v);
    void write_f64(double v);
    void write_u32_array(const std::uint32_t* data, std::size_t n);
    void write_f64_array(const double* data, std::size_t n);
    void finish();

private:
    std::ofstream out_;
    std::filesystem::path path_;
};

class Reader {
public:
    Reader(const std::filesystem::path& file, const char magic[9], std::uint32_t version);
    std::uint32_t read_u32();
    std::uint64_t read_u64();
    double read_f64();
    void read_u32_array(std::uint32_t* data, std::size_t n);
    void read_f64_array(double* data, std::size_t n);
    void expect_eof();

private:
    std::ifstream in_;
    std::filesystem::path path_;
};

}  // namespace zetalab::cache
