#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace defender {

// Proleptic Gregorian day arithmetic (Howard Hinnant's algorithms).
inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr) + (m <= 2);
}

/// Calendar date as days since 1970-01-01 (UTC).
struct Date {
    std::int32_t days = 0;

    Date() = default;
    explicit Date(std::int32_t d) : days(d) {}

    static Date from_civil(int y, unsigned m, unsigned d) {
        return Date(static_cast<std::int32_t>(days_from_civil(y, m, d)));
    }

    // Expects "YYYY-MM-DD".
    static Date parse(const std::string& s) {
        int y = 0;
        unsigned m = 0, d = 0;
        char tail = 0;
        if (std::sscanf(s.c_str(), "%d-%2u-%2u%c", &y, &m, &d, &tail) != 3 || s.size() != 10 ||
            m < 1 || m > 12 || d < 1 || d > 31)
            throw std::invalid_argument("bad date: '" + s + "'");
        Date out = from_civil(y, m, d);
        // reject normalized-away inputs such as 2014-02-30
        int yy;
        unsigned mm, dd;
        civil_from_days(out.days, yy, mm, dd);
        if (yy != y || mm != m || dd != d) throw std::invalid_argument("bad date: '" + s + "'");
        return out;
    }

    std::string str() const {
        int y;
        unsigned m, d;
        civil_from_days(days, y, m, d);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, m, d);
        return buf;
    }

    friend Date operator+(Date a, int n) { return Date(a.days + n); }
    friend Date operator-(Date a, int n) { return Date(a.days - n); }
    friend int operator-(Date a, Date b) { return a.days - b.days; }
    friend bool operator==(Date a, Date b) { return a.days == b.days; }
    friend bool operator!=(Date a, Date b) { return a.days != b.days; }
    friend bool operator<(Date a, Date b) { return a.days < b.days; }
    friend bool operator<=(Date a, Date b) { return a.days <= b.days; }
    friend bool operator>(Date a, Date b) { return a.days > b.days; }
    friend bool operator>=(Date a, Date b) { return a.days >= b.days; }
};

/// UTC instant at second resolution (seconds since the epoch).
struct Timestamp {
    std::int64_t secs = 0;

    Timestamp() = default;
    explicit Timestamp(std::int64_t s) : secs(s) {}

    // Strict RFC 3339 UTC: "YYYY-MM-DDTHH:MM:SSZ".
    static Timestamp parse(const std::string& s) {
        if (s.size() != 20 || s[10] != 'T' || s[19] != 'Z')
            throw std::invalid_argument("bad timestamp: '" + s + "'");
        Date day = Date::parse(s.substr(0, 10));
        unsigned hh = 0, mm = 0, ss = 0;
        char tail = 0;
        if (std::sscanf(s.c_str() + 11, "%2u:%2u:%2u%c", &hh, &mm, &ss, &tail) != 4 ||
            tail != 'Z' || hh > 23 || mm > 59 || ss > 60)
            throw std::invalid_argument("bad timestamp: '" + s + "'");
        return Timestamp(static_cast<std::int64_t>(day.days) * 86400 + hh * 3600 + mm * 60 + ss);
    }

    std::string str() const {
        std::int64_t d = secs >= 0 ? secs / 86400 : (secs - 86399) / 86400;
        std::int64_t rem = secs - d * 86400;
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02dZ",
                      Date(static_cast<std::int32_t>(d)).str().c_str(),
                      static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                      static_cast<int>(rem % 60));
        return buf;
    }

    /// UTC calendar date this instant falls on (midnight-to-midnight).
    Date date() const {
        std::int64_t d = secs >= 0 ? secs / 86400 : (secs - 86399) / 86400;
        return Date(static_cast<std::int32_t>(d));
    }

    friend bool operator==(Timestamp a, Timestamp b) { return a.secs == b.secs; }
    friend bool operator<(Timestamp a, Timestamp b) { return a.secs < b.secs; }
};

}  // namespace defender
