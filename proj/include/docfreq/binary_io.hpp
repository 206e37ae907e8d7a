#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "common.hpp"

namespace docfreq {

// Little-endian append-only buffer.
class byte_writer {
public:
    template <class T>
        requires std::is_integral_v<T>
    void put(T value) {
        using U = std::make_unsigned_t<T>;
        auto u = static_cast<U>(value);
        for (std::size_t i = 0; i < sizeof(T); ++i)
            buf_.push_back(static_cast<char>((u >> (8 * i)) & 0xFF));
    }

    void put_bytes(std::string_view bytes) { buf_.append(bytes); }

    void put_string(std::string_view s) {
        put<std::uint64_t>(s.size());
        put_bytes(s);
    }

    template <class T>
    void put_vector(const std::vector<T>& v) {
        put<std::uint64_t>(v.size());
        for (const auto& x : v)
            put(x);
    }

    // tag (4 bytes) + payload length (u64) + payload
    void put_section(std::string_view tag, const std::string& payload) {
        put_bytes(tag.substr(0, 4));
        put<std::uint64_t>(payload.size());
        put_bytes(payload);
    }

    const std::string& data() const { return buf_; }
    std::string take() { return std::move(buf_); }
    std::size_t size() const { return buf_.size(); }

private:
    std::string buf_;
};

class byte_reader {
public:
    explicit byte_reader(std::string_view data) : data_(data) {}

    template <class T>
        requires std::is_integral_v<T>
    T get() {
        need(sizeof(T));
        using U = std::make_unsigned_t<T>;
        U u = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            u |= static_cast<U>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
        pos_ += sizeof(T);
        return static_cast<T>(u);
    }

    std::string_view get_bytes(std::size_t len) {
        need(len);
        auto out = data_.substr(pos_, len);
        pos_ += len;
        return out;
    }

    std::string get_string() {
        auto len = get<std::uint64_t>();
        return std::string(get_bytes(len));
    }

    template <class T>
    std::vector<T> get_vector() {
        auto len = get<std::uint64_t>();
        if (len > remaining() / sizeof(T))
            throw error(errc::corrupt_container, "vector length exceeds payload");
        std::vector<T> v(len);
        for (auto& x : v)
            x = get<T>();
        return v;
    }

    bool done() const { return pos_ == data_.size(); }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t len) const {
        if (len > data_.size() - pos_)
            throw error(errc::corrupt_container, "unexpected end of data");
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace docfreq
