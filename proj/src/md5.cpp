#include "graphid/md5.hpp"

#include <bit>
#include <cstring>

namespace graphid {

namespace {

// T[i] = floor(2^32 * abs(sin(i + 1)))
constexpr std::array<std::uint32_t, 64> kSine = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee,
    0xf57c0faf, 0x4787c62a, 0xa8304613, 0xfd469501,
    0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be,
    0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821,
    0xf61e2562, 0xc040b340, 0x265e5a51, 0xe9b6c7aa,
    0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed,
    0xa9e3e905, 0xfcefa3f8, 0x676f02d9, 0x8d2a4c8a,
    0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c,
    0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70,
    0x289b7ec6, 0xeaa127fa, 0xd4ef3085, 0x04881d05,
    0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039,
    0x655b59c3, 0x8f0ccc92, 0xffeff47d, 0x85845dd1,
    0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
    0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391,
};

constexpr std::array<int, 64> kShift = {
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21,
};

std::uint32_t load_le32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void store_le32(unsigned char* p, std::uint32_t v) {
    p[0] = static_cast<unsigned char>(v);
    p[1] = static_cast<unsigned char>(v >> 8);
    p[2] = static_cast<unsigned char>(v >> 16);
    p[3] = static_cast<unsigned char>(v >> 24);
}

}  // namespace

void Md5::reset() {
    state_ = {0x67452301u, 0xefcdab89u, 0x98badcfeu, 0x10325476u};
    length_ = 0;
    buffer_.fill(0);
}

void Md5::transform(const unsigned char block[64]) {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) m[i] = load_le32(block + 4 * i);

    std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];

    for (int i = 0; i < 64; ++i) {
        std::uint32_t f;
        int g;
        if (i < 16) {
            f = (b & c) | (~b & d);
            g = i;
        } else if (i < 32) {
            f = (d & b) | (~d & c);
            g = (5 * i + 1) & 15;
        } else if (i < 48) {
            f = b ^ c ^ d;
            g = (3 * i + 5) & 15;
        } else {
            f = c ^ (b | ~d);
            g = (7 * i) & 15;
        }
        std::uint32_t next = b + std::rotl(a + f + kSine[i] + m[g], kShift[i]);
        a = d;
        d = c;
        c = b;
        b = next;
    }

    state_[0] += a;
    state_[1] += b;
    state_[2] += c;
    state_[3] += d;
}

void Md5::update(const unsigned char* data, std::size_t len) {
    std::size_t fill = static_cast<std::size_t>(length_ & 63);
    length_ += len;

    if (fill != 0) {
        std::size_t take = std::min(len, 64 - fill);
        std::memcpy(buffer_.data() + fill, data, take);
        data += take;
        len -= take;
        if (fill + take < 64) return;
        transform(buffer_.data());
    }
    while (len >= 64) {
        transform(data);
        data += 64;
        len -= 64;
    }
    if (len != 0) std::memcpy(buffer_.data(), data, len);
}

HashCode Md5::finish() {
    static constexpr unsigned char kPad[64] = {0x80};
    std::uint64_t bit_length = length_ << 3;

    std::size_t fill = static_cast<std::size_t>(length_ & 63);
    std::size_t pad_len = (fill < 56) ? 56 - fill : 120 - fill;
    update(kPad, pad_len);

    unsigned char length_block[8];
    store_le32(length_block, static_cast<std::uint32_t>(bit_length));
    store_le32(length_block + 4, static_cast<std::uint32_t>(bit_length >> 32));
    update(length_block, 8);

    HashCode out;
    for (int i = 0; i < 4; ++i) store_le32(out.bytes.data() + 4 * i, state_[i]);
    reset();
    return out;
}

HashCode md5_digest(std::span<const unsigned char> data) {
    Md5 md5;
    md5.update(data);
    return md5.finish();
}

HashCode md5_digest(std::string_view text) {
    Md5 md5;
    md5.update(reinterpret_cast<const unsigned char*>(text.data()), text.size());
    return md5.finish();
}

std::string HashCode::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * kDigestSize);
    for (unsigned char b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 15]);
    }
    return out;
}

}  // namespace graphid
