#include "loganon/log_model.hpp"

#include <cstdio>
#include <ctime>

namespace loganon {

namespace {

bool read_fixed_uint(std::string_view text, std::size_t& pos, int digits, long& out) {
    long v = 0;
    for (int i = 0; i < digits; ++i) {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
        v = v * 10 + (text[pos] - '0');
        ++pos;
    }
    out = v;
    return true;
}

bool expect(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) return false;
    ++pos;
    return true;
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text, TimestampFormat format) {
    if (format == TimestampFormat::SuricataDateTime) {
        // MM/DD/YYYY-HH:MM:SS.ffffff
        std::size_t pos = 0;
        long mon, day, year, hour, min, sec;
        if (!read_fixed_uint(text, pos, 2, mon) || !expect(text, pos, '/')
            || !read_fixed_uint(text, pos, 2, day) || !expect(text, pos, '/')
            || !read_fixed_uint(text, pos, 4, year) || !expect(text, pos, '-')
            || !read_fixed_uint(text, pos, 2, hour) || !expect(text, pos, ':')
            || !read_fixed_uint(text, pos, 2, min) || !expect(text, pos, ':')
            || !read_fixed_uint(text, pos, 2, sec))
            return std::nullopt;
        long micros = 0;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            int digits = 0;
            long frac = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && digits < 6) {
                frac = frac * 10 + (text[pos] - '0');
                ++digits;
                ++pos;
            }
            if (digits == 0) return std::nullopt;
            for (int i = digits; i < 6; ++i) frac *= 10;
            micros = frac;
        }
        if (pos != text.size()) return std::nullopt;
        if (mon < 1 || mon > 12 || day < 1 || day > 31 || hour > 23 || min > 59 || sec > 60)
            return std::nullopt;
        std::tm tm{};
        tm.tm_year = int(year - 1900);
        tm.tm_mon = int(mon - 1);
        tm.tm_mday = int(day);
        tm.tm_hour = int(hour);
        tm.tm_min = int(min);
        tm.tm_sec = int(sec);
        std::int64_t secs = timegm(&tm);
        return Timestamp{secs * 1000000 + micros, format};
    }

    // EpochSeconds: integer part, optional fraction up to 6 digits.
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    std::int64_t secs = 0;
    int int_digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        secs = secs * 10 + (text[pos] - '0');
        ++int_digits;
        ++pos;
    }
    if (int_digits == 0) return std::nullopt;
    std::int64_t frac = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        int digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && digits < 6) {
            frac = frac * 10 + (text[pos] - '0');
            ++digits;
            ++pos;
        }
        if (digits == 0) return std::nullopt;
        for (int i = digits; i < 6; ++i) frac *= 10;
    }
    if (pos != text.size()) return std::nullopt;
    std::int64_t micros = secs * 1000000 + frac;
    return Timestamp{neg ? -micros : micros, TimestampFormat::EpochSeconds};
}

std::string render_timestamp(const Timestamp& ts, int fraction_digits) {
    if (fraction_digits < 0) fraction_digits = 0;
    if (fraction_digits > 6) fraction_digits = 6;
    std::int64_t micros = ts.micros;
    std::int64_t secs = micros / 1000000;
    std::int64_t frac = micros % 1000000;
    if (frac < 0) {
        frac += 1000000;
        secs -= 1;
    }
    char buf[64];
    if (ts.format == TimestampFormat::SuricataDateTime) {
        std::time_t t = secs;
        std::tm tm{};
        gmtime_r(&t, &tm);
        int n = std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d-%02d:%02d:%02d",
                              tm.tm_mon + 1, tm.tm_mday, tm.tm_year + 1900, tm.tm_hour,
                              tm.tm_min, tm.tm_sec);
        std::string out(buf, std::size_t(n));
        if (fraction_digits > 0) {
            std::snprintf(buf, sizeof(buf), ".%06lld", (long long)frac);
            out.append(buf, std::size_t(1 + fraction_digits));
        }
        return out;
    }
    int n = std::snprintf(buf, sizeof(buf), "%lld", (long long)secs);
    std::string out(buf, std::size_t(n));
    if (fraction_digits > 0) {
        std::snprintf(buf, sizeof(buf), ".%06lld", (long long)frac);
        out.append(buf, std::size_t(1 + fraction_digits));
    }
    return out;
}

}  // namespace loganon
