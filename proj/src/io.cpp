#include "zgon/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zgon {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long long integer() {
        skip_ws();
        const size_t begin = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == begin || (pos_ == begin + 1 && !std::isdigit(static_cast<unsigned char>(s_[begin]))))
            fail("expected an integer");
        return std::stoll(s_.substr(begin, pos_ - begin));
    }

    void finish() {
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    what + " in \"" + s_ + "\"");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

Point point_at(Cursor& c) {
    Point z;
    const long long copy = c.integer();
    c.expect(':');
    z.index = c.integer();
    if (copy < 1) c.fail("copy must be positive");
    z.copy = static_cast<int>(copy);
    return z;
}

}  // namespace

std::string format_point(const Point& z) {
    return std::to_string(z.copy) + ":" + std::to_string(z.index);
}

std::string format_interval(const Interval& u) {
    return "(" + format_point(u.start) + ", " + format_point(u.end) + "; " +
           std::to_string(u.winding) + ")";
}

std::string format_arc(const Arc& a) {
    return "(" + format_point(a.hi) + " | " + format_point(a.lo) + ")";
}

Point parse_point(const std::string& text) {
    Cursor c(text);
    const Point z = point_at(c);
    c.finish();
    return z;
}

Interval parse_interval(const std::string& text) {
    Cursor c(text);
    c.expect('(');
    Interval u;
    u.start = point_at(c);
    c.expect(',');
    u.end = point_at(c);
    c.expect(';');
    const long long h = c.integer();
    c.expect(')');
    c.finish();
    if (h != 0 && h != 1) c.fail("winding must be 0 or 1");
    u.winding = static_cast<int>(h);
    return u;
}

Arc parse_arc(const std::string& text) {
    Cursor c(text);
    c.expect('(');
    Arc a;
    a.hi = point_at(c);
    c.expect('|');
    a.lo = point_at(c);
    c.expect(')');
    c.finish();
    return a;
}

std::string hom_report_to_json(const HomReport& r, const std::string& source,
                               const std::string& target) {
    nlohmann::json j{
        {"source", source},
        {"target", target},
        {"dim_rep", r.dim_rep},
        {"dim_proj", r.dim_proj},
        {"dim_stable", r.dim_stable},
        {"hammock", to_string(r.hammock)},
    };
    return j.dump();
}

std::string hom_report_to_text(const HomReport& r, const std::string& source,
                               const std::string& target) {
    std::ostringstream os;
    os << "Hom " << source << " -> " << target << "\n"
       << "  dim_rep    " << r.dim_rep << "\n"
       << "  dim_proj   " << r.dim_proj << "\n"
       << "  dim_stable " << r.dim_stable << "\n"
       << "  hammock    " << to_string(r.hammock) << "\n";
    return os.str();
}

}  // namespace zgon
