#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace graphid {

inline constexpr std::size_t kDigestSize = 16;

// A 128-bit digest. Ordering is lexicographic over the raw bytes; the
// display form is 32 lowercase hex digits. A default-constructed value
// is the all-zero digest.
struct HashCode {
    std::array<unsigned char, kDigestSize> bytes{};

    auto operator<=>(const HashCode&) const = default;

    std::string hex() const;
};

// Incremental MD5 (RFC 1321).
class Md5 {
public:
    Md5() { reset(); }

    void reset();
    void update(const unsigned char* data, std::size_t len);
    void update(std::span<const unsigned char> data) { update(data.data(), data.size()); }
    HashCode finish();

private:
    void transform(const unsigned char block[64]);

    std::array<std::uint32_t, 4> state_;
    std::uint64_t length_;            // message length in bytes
    std::array<unsigned char, 64> buffer_;
};

HashCode md5_digest(std::span<const unsigned char> data);
HashCode md5_digest(std::string_view text);

}  // namespace graphid
