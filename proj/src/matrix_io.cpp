#include "ptsym/matrix_io.hpp"

#include <utility>
#include <vector>

namespace ptsym {

namespace {

// Raw value tree built by the SAX pass: number tokens are kept as text so
// decimals can be converted exactly rather than through a rounded double.
struct RawValue {
    enum class Kind { integer, decimal, text, array, other };
    Kind kind = Kind::other;
    std::string token;
    std::vector<RawValue> items;
    std::vector<std::pair<std::string, RawValue>> fields;  // top-level object only
    bool is_object = false;
};

class RawSax : public nlohmann::json_sax<nlohmann::json> {
public:
    RawValue root;

    bool null() override { return value(RawValue{}); }
    bool boolean(bool) override { return value(RawValue{}); }
    bool number_integer(number_integer_t v) override {
        return value({RawValue::Kind::integer, std::to_string(v), {}, {}, false});
    }
    bool number_unsigned(number_unsigned_t v) override {
        return value({RawValue::Kind::integer, std::to_string(v), {}, {}, false});
    }
    bool number_float(number_float_t, const string_t& raw) override {
        return value({RawValue::Kind::decimal, raw, {}, {}, false});
    }
    bool string(string_t& v) override {
        return value({RawValue::Kind::text, v, {}, {}, false});
    }
    bool binary(binary_t&) override { return value(RawValue{}); }

    bool start_object(std::size_t) override {
        RawValue obj;
        obj.is_object = true;
        stack_.push_back(std::move(obj));
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override { return pop(); }

    bool start_array(std::size_t) override {
        RawValue arr;
        arr.kind = RawValue::Kind::array;
        stack_.push_back(std::move(arr));
        return true;
    }
    bool end_array() override { return pop(); }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw MatrixParseError("matrix file: syntax error at byte " + std::to_string(position) +
                               ": " + ex.what());
    }

private:
    bool value(RawValue v) {
        if (stack_.empty()) {
            root = std::move(v);
        } else if (stack_.back().is_object) {
            stack_.back().fields.emplace_back(std::move(key_), std::move(v));
        } else {
            stack_.back().items.push_back(std::move(v));
        }
        return true;
    }
    bool pop() {
        RawValue v = std::move(stack_.back());
        stack_.pop_back();
        return value(std::move(v));
    }

    std::vector<RawValue> stack_;
    std::string key_;
};

struct ScalarResult {
    GaussianRational value;
    bool saw_decimal = false;
};

[[noreturn]] void fail_at(std::size_t row, std::size_t col, const std::string& what) {
    throw MatrixParseError("matrix file: row " + std::to_string(row + 1) + ", column " +
                           std::to_string(col + 1) + ": " + what);
}

ScalarResult parse_real(const RawValue& v, std::size_t row, std::size_t col) {
    switch (v.kind) {
        case RawValue::Kind::integer:
            return {GaussianRational(Rational::parse(v.token)), false};
        case RawValue::Kind::decimal:
            return {GaussianRational(Rational::parse(v.token)), true};
        case RawValue::Kind::text:
            try {
                return {GaussianRational(Rational::parse(v.token)), false};
            } catch (const std::invalid_argument& e) {
                fail_at(row, col, e.what());
            }
        default:
            fail_at(row, col, "expected a number, a \"p/q\" string, or an [re, im] pair");
    }
}

ScalarResult parse_scalar(const RawValue& v, std::size_t row, std::size_t col) {
    if (v.kind == RawValue::Kind::array) {
        if (v.items.size() != 2)
            fail_at(row, col, "complex entry must be a two-element array [re, im]");
        const ScalarResult re = parse_real(v.items[0], row, col);
        const ScalarResult im = parse_real(v.items[1], row, col);
        return {GaussianRational(re.value.real(), im.value.real()),
                re.saw_decimal || im.saw_decimal};
    }
    return parse_real(v, row, col);
}

}  // namespace

ParsedMatrix parse_matrix_json(const std::string& text) {
    RawSax sax;
    nlohmann::json::sax_parse(text, &sax);

    const RawValue* entries = nullptr;
    long declared_dim = -1;
    if (sax.root.is_object) {
        for (const auto& [key, value] : sax.root.fields) {
            if (key == "entries") {
                entries = &value;
            } else if (key == "dimension") {
                if (value.kind != RawValue::Kind::integer)
                    throw MatrixParseError("matrix file: \"dimension\" must be an integer");
                declared_dim = std::stol(value.token);
            } else {
                throw MatrixParseError("matrix file: unknown field \"" + key + "\"");
            }
        }
        if (!entries) throw MatrixParseError("matrix file: missing \"entries\" field");
    } else if (sax.root.kind == RawValue::Kind::array) {
        entries = &sax.root;
    } else {
        throw MatrixParseError("matrix file: top level must be an array of rows or an object");
    }

    const std::size_t n = entries->items.size();
    if (n == 0) throw MatrixParseError("matrix file: matrix must have dimension >= 1");
    if (declared_dim >= 0 && static_cast<std::size_t>(declared_dim) != n)
        throw MatrixParseError("matrix file: \"dimension\" " + std::to_string(declared_dim) +
                               " does not match " + std::to_string(n) + " rows");

    ParsedMatrix out{SquareMatrix<GaussianRational>(n), false};
    for (std::size_t i = 0; i < n; ++i) {
        const RawValue& row = entries->items[i];
        if (row.kind != RawValue::Kind::array)
            throw MatrixParseError("matrix file: row " + std::to_string(i + 1) +
                                   " is not an array");
        if (row.items.size() != n)
            throw MatrixParseError("matrix file: row " + std::to_string(i + 1) + " has " +
                                   std::to_string(row.items.size()) + " entries, expected " +
                                   std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const ScalarResult s = parse_scalar(row.items[j], i, j);
            out.matrix(i, j) = s.value;
            out.saw_decimal = out.saw_decimal || s.saw_decimal;
        }
    }
    return out;
}

nlohmann::ordered_json matrix_to_json(const SquareMatrix<GaussianRational>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const GaussianRational& z = m(i, j);
            if (z.is_real())
                row.push_back(z.real().str());
            else
                row.push_back(nlohmann::ordered_json::array({z.real().str(), z.imag().str()}));
        }
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["dimension"] = m.dim();
    doc["entries"] = std::move(rows);
    return doc;
}

}  // namespace ptsym
