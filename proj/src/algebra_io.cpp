#include "zinbiel/algebra_io.hpp"

#include <json.hpp>

#include <set>
#include <utility>

namespace zinbiel {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxDim = 64;

[[noreturn]] void fail(const std::string& context, const std::string& why) {
    throw ParseError(context.empty() ? why : context + ": " + why);
}

void require_keys(const json& obj, const std::string& context,
                  std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (!obj.contains(k)) fail(context, std::string("missing key '") + k + "'");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) fail(context, "unknown key '" + key + "'");
        (void)value;
    }
}

long long get_integer(const json& obj, const std::string& context, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(context, std::string("'") + key + "' must be an integer");
    return v.get<long long>();
}

std::size_t get_index(const json& obj, const std::string& context, const char* key,
                      std::size_t dim) {
    const long long v = get_integer(obj, context, key);
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        fail(context, std::string("'") + key + "' = " + std::to_string(v) +
                          " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v);
}

} // namespace

AlgebraSpec parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // message carries line/column context
    }

    if (!doc.is_object()) fail("", "top level must be an object");
    require_keys(doc, "document", {"format", "name", "dim", "products"});

    if (get_integer(doc, "document", "format") != 1)
        fail("document", "unsupported format version (expected 1)");
    if (!doc.at("name").is_string()) fail("document", "'name' must be a string");
    const long long dim_value = get_integer(doc, "document", "dim");
    if (dim_value < 1 || static_cast<std::size_t>(dim_value) > kMaxDim)
        fail("document", "'dim' must be in 1.." + std::to_string(kMaxDim));
    const std::size_t dim = static_cast<std::size_t>(dim_value);
    if (!doc.at("products").is_array()) fail("document", "'products' must be an array");

    AlgebraSpec spec(doc.at("name").get<std::string>(), dim);
    std::set<std::pair<std::size_t, std::size_t>> seen_pairs;

    const json& products = doc.at("products");
    for (std::size_t p = 0; p < products.size(); ++p) {
        const std::string pctx = "products[" + std::to_string(p) + "]";
        const json& prod = products[p];
        if (!prod.is_object()) fail(pctx, "must be an object");
        require_keys(prod, pctx, {"left", "right", "result"});

        const std::size_t left = get_index(prod, pctx, "left", dim);
        const std::size_t right = get_index(prod, pctx, "right", dim);
        if (!seen_pairs.insert({left, right}).second)
            fail(pctx, "duplicate product for (left, right) = (" + std::to_string(left) +
                           ", " + std::to_string(right) + ")");

        const json& result = prod.at("result");
        if (!result.is_array()) fail(pctx, "'result' must be an array");
        std::set<std::size_t> seen_basis;
        for (std::size_t r = 0; r < result.size(); ++r) {
            const std::string rctx = pctx + ".result[" + std::to_string(r) + "]";
            const json& term = result[r];
            if (!term.is_object()) fail(rctx, "must be an object");
            require_keys(term, rctx, {"basis", "coeff"});

            const std::size_t basis = get_index(term, rctx, "basis", dim);
            if (!seen_basis.insert(basis).second)
                fail(rctx, "duplicate basis index " + std::to_string(basis));
            if (!term.at("coeff").is_string()) fail(rctx, "'coeff' must be a string");
            Rational coeff;
            try {
                coeff = Rational::from_string(term.at("coeff").get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(rctx + ".coeff", e.what());
            }
            spec.gamma(left - 1, right - 1, basis - 1) = coeff;
        }
    }
    return spec;
}

std::string emit_algebra(const AlgebraSpec& a) {
    using ordered = nlohmann::ordered_json;
    const std::size_t n = a.dim();

    ordered products = ordered::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ordered result = ordered::array();
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& g = a.gamma(i, j, k);
                if (g.is_zero()) continue;
                result.push_back(ordered{{"basis", k + 1}, {"coeff", g.str()}});
            }
            if (result.empty()) continue;
            products.push_back(
                ordered{{"left", i + 1}, {"right", j + 1}, {"result", std::move(result)}});
        }

    ordered doc{{"format", 1}, {"name", a.name()}, {"dim", n}, {"products", std::move(products)}};
    return doc.dump(2) + "\n";
}

} // namespace zinbiel
