#include "hopfdoubles/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace hopfdoubles {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- writing

std::string quoted(const std::string& s)
{
    return json(s).dump(-1, ' ', false);
}

std::string scalar_text(const Scalar& c)
{
    return quoted(c.to_string());
}

std::string name_list(const std::vector<std::string>& names)
{
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? ", " : "") + quoted(names[i]);
    return out + "]";
}

std::string vector_inline(const SparseVec& v)
{
    std::string out = "[";
    bool first = true;
    for (const auto& [i, c] : v) {
        out += (first ? "[" : ", [") + std::to_string(i) + ", " + scalar_text(c) + "]";
        first = false;
    }
    return out + "]";
}

// One entry per line; each row is the index prefix plus a scalar.
std::string entry_block(const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& rows, const std::string& indent)
{
    if (rows.empty())
        return "[]";
    std::string out = "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += indent + "  [";
        for (auto i : rows[r].first)
            out += std::to_string(i) + ", ";
        out += scalar_text(rows[r].second) + "]" + (r + 1 < rows.size() ? ",\n" : "\n");
    }
    return out + indent + "]";
}

using Rows = std::vector<std::pair<std::vector<std::size_t>, Scalar>>;

Rows mult_rows(const Algebra& a)
{
    Rows rows;
    const std::size_t n = a.dim();
    for (std::size_t ij = 0; ij < a.mult.size(); ++ij)
        for (const auto& [k, c] : a.mult[ij])
            rows.push_back({{ij / n, ij % n, k}, c});
    return rows;
}

Rows comult_rows(const HopfData& h)
{
    Rows rows;
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [flat, c] : h.comult[i])
            rows.push_back({{i, flat / n, flat % n}, c});
    return rows;
}

Rows antipode_rows(const HopfData& h)
{
    Rows rows;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (const auto& [j, c] : h.antipode.column(i))
            rows.push_back({{i, j}, c});
    return rows;
}

using Lines = std::vector<std::pair<std::string, std::string>>;

std::string object_text(const Lines& lines, const std::string& indent)
{
    std::string out = "{\n";
    for (std::size_t i = 0; i < lines.size(); ++i)
        out += indent + "  " + quoted(lines[i].first) + ": " + lines[i].second + (i + 1 < lines.size() ? ",\n" : "\n");
    return out + indent + "}";
}

void algebra_lines(Lines& out, const Algebra& a, const std::string& indent)
{
    out.emplace_back("basis", name_list(a.basis));
    if (a.grading) {
        std::string degrees = "[";
        for (std::size_t i = 0; i < a.grading->degree.size(); ++i)
            degrees += (i ? ", " : "") + std::to_string(a.grading->degree[i]);
        out.emplace_back("grading", "{\"degrees\": " + degrees + "], \"cutoff\": " +
                                        std::to_string(a.grading->cutoff) + "}");
    }
    out.emplace_back("unit", vector_inline(a.unit));
    out.emplace_back("mult", entry_block(mult_rows(a), indent + "  "));
}

void hopf_lines(Lines& out, const HopfData& h, const std::string& indent)
{
    out.emplace_back("comult", entry_block(comult_rows(h), indent + "  "));
    out.emplace_back("counit", vector_inline(h.counit));
    out.emplace_back("antipode", entry_block(antipode_rows(h), indent + "  "));
    if (h.bialgebra_only)
        out.emplace_back("bialgebra_only", "true");
}

// ---------------------------------------------------------------- reading

struct Location {
    std::size_t line = 1, column = 1;
};

Location location_of(std::string_view text, std::size_t offset)
{
    Location loc;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        } else {
            ++loc.column;
        }
    }
    return loc;
}

std::size_t skip_string(std::string_view text, std::size_t i)
{
    for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\')
            ++i;
    return i;
}

// Offset of a key at object depth 1 inside the object starting at `from`.
std::optional<std::size_t> key_offset(std::string_view text, const std::string& key, std::size_t from = 0)
{
    int depth = 0;
    for (std::size_t i = from; i < text.size(); ++i) {
        char c = text[i];
        if (c == '{' || c == '[')
            ++depth;
        else if (c == '}' || c == ']') {
            if (--depth == 0)
                return std::nullopt;
        } else if (c == '"') {
            std::size_t end = skip_string(text, i);
            if (depth == 1 && text.substr(i + 1, end - i - 1) == key) {
                std::size_t j = end + 1;
                while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
                    ++j;
                if (j < text.size() && text[j] == ':')
                    return i;
            }
            i = end;
        }
    }
    return std::nullopt;
}

// Offset of element `index` of the array stored under `key`.
std::size_t element_offset(std::string_view text, std::size_t key_pos, std::size_t index)
{
    std::size_t i = text.find('[', text.find(':', key_pos));
    if (i == std::string_view::npos)
        return key_pos;
    int depth = 0;
    std::size_t count = 0;
    bool expecting = true;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (depth == 1 && expecting && c != ']') {
            if (count == index)
                return i;
            ++count;
            expecting = false;
        }
        if (c == '"')
            i = skip_string(text, i);
        else if (c == '[' || c == '{')
            ++depth;
        else if (c == ']' || c == '}') {
            if (--depth == 0)
                break;
        } else if (c == ',' && depth == 1)
            expecting = true;
    }
    return key_pos;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail_at(std::size_t offset, const std::string& what) const
    {
        auto loc = location_of(text_, offset);
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + what);
    }

    [[noreturn]] void fail(const std::string& key, std::optional<std::size_t> entry, const std::string& what) const
    {
        auto pos = key_offset(text_, key, base_);
        std::size_t off = pos ? *pos : base_;
        if (pos && entry)
            off = element_offset(text_, *pos, *entry);
        fail_at(off, what);
    }

    json parse() const
    {
        try {
            return json::parse(text_);
        } catch (const json::parse_error& e) {
            fail_at(e.byte == 0 ? 0 : e.byte - 1, std::string("malformed JSON: ") + e.what());
        }
    }

    void expect_keys(const json& obj, const std::set<std::string>& allowed, const std::vector<std::string>& required,
                     const std::string& where) const
    {
        if (!obj.is_object())
            fail_at(base_, where + " must be a JSON object");
        for (const auto& [key, _] : obj.items())
            if (!allowed.count(key))
                fail(key, std::nullopt, "unknown field \"" + key + "\" in " + where);
        for (const auto& key : required)
            if (!obj.contains(key))
                fail_at(base_, "missing " + key);
    }

    std::size_t index(const json& v, std::size_t bound, const std::string& key, std::size_t entry) const
    {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= bound)
            fail(key, entry, key + " entry #" + std::to_string(entry) + ": index " + v.dump() + " out of range [0, " +
                                 std::to_string(bound) + ")");
        return v.get<std::size_t>();
    }

    Scalar scalar(const Field& f, const json& v, const std::string& key, std::size_t entry) const
    {
        if (!v.is_string())
            fail(key, entry, key + " entry #" + std::to_string(entry) + ": scalars must be strings");
        try {
            return f.parse(v.get<std::string>());
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::FieldMismatch)
                throw;
            fail(key, entry, key + " entry #" + std::to_string(entry) + ": " + e.what());
        }
    }

    // Rows of `arity` indices (each bounded) followed by a scalar.
    template <typename F>
    void rows(const json& obj, const std::string& key, const Field& f, const std::vector<std::size_t>& bounds,
              F&& sink) const
    {
        const auto& arr = obj.at(key);
        if (!arr.is_array())
            fail(key, std::nullopt, key + " must be an array");
        for (std::size_t e = 0; e < arr.size(); ++e) {
            const auto& row = arr[e];
            if (!row.is_array() || row.size() != bounds.size() + 1)
                fail(key, e, key + " entry #" + std::to_string(e) + ": expected " + std::to_string(bounds.size()) +
                                 " indices and a scalar");
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < bounds.size(); ++i)
                idx.push_back(index(row[i], bounds[i], key, e));
            sink(idx, scalar(f, row.back(), key, e));
        }
    }

    SparseVec vector(const json& obj, const std::string& key, const Field& f, std::size_t dim) const
    {
        SparseVec v(f, dim);
        rows(obj, key, f, {dim}, [&](const auto& idx, const Scalar& c) { v.add(idx[0], c); });
        return v;
    }

    Algebra algebra(const json& obj, const Field& f) const
    {
        Algebra a;
        a.field = f;
        if (!obj.at("basis").is_array())
            fail("basis", std::nullopt, "basis must be an array of names");
        for (std::size_t i = 0; i < obj.at("basis").size(); ++i) {
            if (!obj.at("basis")[i].is_string())
                fail("basis", i, "basis entry #" + std::to_string(i) + " must be a string");
            a.basis.push_back(obj.at("basis")[i].get<std::string>());
        }
        const std::size_t n = a.dim();
        if (obj.contains("grading")) {
            const auto& g = obj.at("grading");
            if (!g.is_object() || !g.contains("degrees") || !g.contains("cutoff") || g.size() != 2 ||
                !g.at("degrees").is_array() || g.at("degrees").size() != n || !g.at("cutoff").is_number_integer())
                fail("grading", std::nullopt, "grading must be {\"degrees\": [one per basis element], \"cutoff\": int}");
            Grading gr;
            gr.cutoff = g.at("cutoff").get<int>();
            for (const auto& d : g.at("degrees")) {
                if (!d.is_number_integer())
                    fail("grading", std::nullopt, "degrees must be integers");
                gr.degree.push_back(d.get<int>());
            }
            a.grading = std::move(gr);
        }
        a.unit = vector(obj, "unit", f, n);
        a.mult.assign(n * n, SparseVec(f, n));
        rows(obj, "mult", f, {n, n, n}, [&](const auto& idx, const Scalar& c) { a.mult[idx[0] * n + idx[1]].add(idx[2], c); });
        return a;
    }

    void hopf_parts(const json& obj, HopfData& h) const
    {
        const std::size_t n = h.dim();
        const Field& f = h.field;
        h.comult.assign(n, SparseVec(f, n * n));
        rows(obj, "comult", f, {n, n, n},
             [&](const auto& idx, const Scalar& c) { h.comult[idx[0]].add(idx[1] * n + idx[2], c); });
        h.counit = vector(obj, "counit", f, n);
        std::vector<SparseVec> cols(n, SparseVec(f, n));
        rows(obj, "antipode", f, {n, n}, [&](const auto& idx, const Scalar& c) { cols[idx[0]].add(idx[1], c); });
        h.antipode = LinearMap(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            h.antipode.set_column(i, cols[i]);
        if (obj.contains("bialgebra_only")) {
            if (!obj.at("bialgebra_only").is_boolean())
                fail("bialgebra_only", std::nullopt, "bialgebra_only must be a boolean");
            h.bialgebra_only = obj.at("bialgebra_only").get<bool>();
        }
    }

    Field field(const json& obj) const
    {
        if (!obj.at("field").is_string())
            fail("field", std::nullopt, "field must be a string such as \"Q\" or \"F_5\"");
        try {
            return Field::from_name(obj.at("field").get<std::string>());
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotPrime)
                throw;
            fail("field", std::nullopt, e.what());
        }
    }

    void version(const json& obj, const std::string& kind) const
    {
        if (obj.at("format_version") != kAlgebraFormatVersion)
            fail("format_version", std::nullopt,
                 "unsupported format_version " + obj.at("format_version").dump());
        if (obj.at("kind") != kind)
            fail("kind", std::nullopt, "expected kind \"" + kind + "\", got " + obj.at("kind").dump());
    }

    void set_base(std::size_t b) { base_ = b; }

private:
    std::string_view text_;
    std::size_t base_ = 0;
};

const std::set<std::string> kAlgebraKeys{"basis", "grading", "unit", "mult"};
const std::set<std::string> kHopfKeys{"comult", "counit", "antipode", "bialgebra_only"};

std::set<std::string> keys_union(std::initializer_list<std::set<std::string>> sets, std::set<std::string> extra)
{
    for (const auto& s : sets)
        extra.insert(s.begin(), s.end());
    return extra;
}

// ---------------------------------------------------------------- reports

ordered_json vector_json(const SparseVec& v)
{
    auto arr = ordered_json::array();
    for (const auto& [i, c] : v)
        arr.push_back(ordered_json::array({i, c.to_string()}));
    return arr;
}

SparseVec vector_from_json(const json& arr, const Field& f, std::size_t dim)
{
    SparseVec v(f, dim);
    for (const auto& e : arr)
        v.add(e.at(0).get<std::size_t>(), f.parse(e.at(1).get<std::string>()));
    return v;
}

ordered_json report_json(const VerificationReport& r)
{
    ordered_json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["cases"] = r.cases;
    j["notes"] = r.notes;
    if (r.witness) {
        const auto& w = *r.witness;
        ordered_json wj;
        wj["indices"] = w.indices;
        wj["labels"] = w.labels;
        wj["field"] = w.lhs.field().name();
        wj["dim"] = w.lhs.dim();
        wj["lhs"] = vector_json(w.lhs);
        wj["rhs"] = vector_json(w.rhs);
        wj["lhs_text"] = w.lhs_text;
        wj["rhs_text"] = w.rhs_text;
        j["witness"] = wj;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

VerificationReport report_from(const json& j)
{
    VerificationReport r;
    r.name = j.at("name").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.cases = j.at("cases").get<std::size_t>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (!j.at("witness").is_null()) {
        const auto& wj = j.at("witness");
        Witness w;
        auto f = Field::from_name(wj.at("field").get<std::string>());
        auto dim = wj.at("dim").get<std::size_t>();
        w.indices = wj.at("indices").get<std::vector<std::size_t>>();
        w.labels = wj.at("labels").get<std::string>();
        w.lhs = vector_from_json(wj.at("lhs"), f, dim);
        w.rhs = vector_from_json(wj.at("rhs"), f, dim);
        w.lhs_text = wj.at("lhs_text").get<std::string>();
        w.rhs_text = wj.at("rhs_text").get<std::string>();
        r.witness = std::move(w);
    }
    return r;
}

// ---------------------------------------------------------------- instances

std::optional<CayleyTable> group_for(const std::string& name)
{
    if (name == "group:C2xC2")
        return CayleyTable::klein_four();
    if (name == "group:S3")
        return CayleyTable::symmetric3();
    if (name.starts_with("group:C")) {
        try {
            std::size_t used = 0;
            int n = std::stoi(name.substr(7), &used);
            if (used == name.size() - 7 && n >= 1)
                return CayleyTable::cyclic(n);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

std::string with_cutoff(const std::string& instance, const SuiteParams& params)
{
    for (std::string family : {"binomial:graded", "landweber-novikov"}) {
        if (instance != family && instance != family + ":")
            continue;
        if (!params.cutoff)
            throw Error(ErrorKind::UnknownInstance, instance + " needs --cutoff");
        return family == "binomial:graded" ? "binomial:gradedN=" + std::to_string(*params.cutoff)
                                           : "landweber-novikov:N=" + std::to_string(*params.cutoff);
    }
    return instance;
}

bool is_file_reference(const std::string& instance)
{
    return instance.find('/') != std::string::npos || instance.ends_with(".json");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::UnknownInstance, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<LandweberNovikovPair> pair_for(const std::string& name)
{
    if (!name.starts_with("landweber-novikov:N="))
        return std::nullopt;
    return landweber_novikov_pair(std::stoi(name.substr(20)));
}

bool is_s_squared_identity(const HopfData& h)
{
    return antipode_power(h, 2).is_identity();
}

void tag(std::vector<VerificationReport>& rs, const std::string& prefix)
{
    for (auto& r : rs)
        r.name = prefix + r.name;
}

VerificationReport expect_failure(const std::string& name, VerificationReport inner)
{
    VerificationReport r;
    r.name = name;
    r.cases = inner.cases;
    r.passed = !inner.passed && inner.witness.has_value();
    r.notes.push_back(inner.passed ? "control unexpectedly passed: " + inner.name
                                   : "control fails as expected at " + inner.witness->labels);
    return r;
}

VerificationReport single_check(const std::string& name, bool ok, const std::string& note = {})
{
    VerificationReport r;
    r.name = name;
    r.passed = ok;
    r.cases = 1;
    if (!note.empty())
        r.notes.push_back(note);
    return r;
}

// ---------------------------------------------------------------- suites

std::vector<VerificationReport> suite_lemma1(const HopfData& h, const SuiteParams& p)
{
    std::vector<int> ks = p.k ? std::vector<int>{*p.k} : h.grading ? std::vector<int>{0, 1} : std::vector<int>{-1, 0, 1};
    std::vector<VerificationReport> out;
    for (int k : ks) {
        auto rs = verify_lemma1(h, k);
        tag(rs, "k=" + std::to_string(k) + ": ");
        out.insert(out.end(), rs.begin(), rs.end());
    }
    if (!p.k && !is_s_squared_identity(h)) {
        auto a = adjoint_action(h, AdjointVariant::RStar, 0), b = adjoint_action(h, AdjointVariant::RStar, 2);
        out.push_back(single_check("R*_x and R*_{s^2 x} differ (k=0 vs k=1)", a.ops != b.ops));
    }
    return out;
}

std::vector<VerificationReport> suite_lemma3(const HopfData& h, const SuiteParams& p)
{
    std::vector<int> ks = p.k ? std::vector<int>{*p.k} : std::vector<int>{0, 1};
    std::vector<VerificationReport> out;
    for (int k : ks) {
        auto r = verify_lemma3(h, k);
        auto control = lemma3_parity_control(h, k);
        r.notes.push_back(std::string("parity control (2k against 2k+1): ") +
                          (control.passed ? "coincides" : "differs at " + control.witness->labels));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> suite_lemma4(const HopfData& h, const SuiteParams& p)
{
    if (!p.m || !p.l || !p.k || !p.n)
        throw Error(ErrorKind::ConstraintViolated, "lemma4 needs --m, --l, --k and --n");
    int k1 = p.k1 ? *p.k1 : *p.n - (*p.l + *p.m);
    auto a = lemma4_antihom(h, *p.m, *p.l, *p.k, *p.n, k1);
    auto second = a.second.verified;
    second.notes.push_back(std::string("literal R*_{s^{2k1+1}x} target: ") +
                           (a.literal_second.passed ? "pass" : "fails"));
    return {a.first.verified, second};
}

std::vector<VerificationReport> suite_double_oracle(const std::string& instance, const HopfData& h)
{
    if (h.grading)
        throw Error(ErrorKind::RecipeMismatch, "the Drinfeld double needs an ungraded finite-dimensional instance; "
                                               "truncation does not preserve its coproduct");
    auto d = build_drinfeld_double(h);
    std::vector<VerificationReport> out;
    if (auto g = group_for(instance))
        out.push_back(compare_multiplication("D(k[G]) against the conjugation oracle", d, oracle_group_double(*g, h.field)));
    auto axioms = check_drinfeld_axioms(d);
    tag(axioms, "D(X) ");
    out.insert(out.end(), axioms.begin(), axioms.end());
    if (!group_for(instance))
        out.front().notes.push_back("not a group algebra: oracle comparison skipped");
    return out;
}

bool is_primitive(const HopfData& h, std::size_t i)
{
    auto e = h.basis_vector(i);
    return h.comult[i] == tensor(e, h.unit) + tensor(h.unit, e);
}

bool is_group_like(const HopfData& h, std::size_t i)
{
    auto e = h.basis_vector(i);
    return h.comult[i] == tensor(e, e);
}

std::vector<VerificationReport> suite_r_exponential(const HopfData& h)
{
    const std::size_t n = h.dim();
    if (n < 2 || !is_primitive(h, 1))
        throw Error(ErrorKind::RecipeMismatch, "r-exponential needs a primitive generator x at basis index 1");
    auto dual = dual_hopf(h);
    std::vector<SparseVec> family{dual.unit}, xs{h.unit};
    std::vector<std::string> names{"1"};
    for (std::size_t k = 1; k < n; ++k) {
        family.push_back(dual.multiply(family.back(), dual.basis_vector(1)));
        xs.push_back(h.multiply(xs.back(), h.basis_vector(1)));
        names.push_back("p^" + std::to_string(k));
    }
    std::vector<VerificationReport> out;
    out.push_back(IdentitySweep{"basis element n is x^n",
                                {n},
                                nullptr,
                                [&](std::span<const std::size_t> t) { return std::pair{xs[t[0]], h.basis_vector(t[0])}; },
                                {h.basis},
                                {h.basis}}
                      .run());
    auto r = canonical_R_in(h, family, names);
    SparseVec expected(h.field, n * n);
    Scalar fact = h.field.one();
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0)
            fact *= h.field.from_int(static_cast<long>(k));
        expected.add(k * n + k, fact.inverse());
    }
    out.push_back(IdentitySweep{"R = sum p^n (x) x^n / n!",
                                {1},
                                nullptr,
                                [&](std::span<const std::size_t>) { return std::pair{r.tensor, expected}; },
                                {{"R"}},
                                {names, h.basis}}
                      .run());
    out.push_back(IdentitySweep{"contraction of R with e_j gives e_j",
                                {n},
                                nullptr,
                                [&](std::span<const std::size_t> t) {
                                    return std::pair{contract_R(h, canonical_R(h), t[0]), h.basis_vector(t[0])};
                                },
                                {h.basis},
                                {h.basis}}
                      .run());
    out.push_back(IdentitySweep{"s x = -x, s p = -p",
                                {2},
                                nullptr,
                                [&](std::span<const std::size_t> t) {
                                    if (t[0] == 0)
                                        return std::pair{h.antipode.apply(h.basis_vector(1)), h.basis_vector(1).scaled(-h.field.one())};
                                    return std::pair{dual.antipode.apply(family[1]), family[1].scaled(-h.field.one())};
                                },
                                {{"x", "p"}},
                                {h.basis}}
                      .run());
    return out;
}

std::vector<VerificationReport> suite_milnor(const std::string& instance, const HopfData& h, const SuiteParams& p)
{
    if (auto pair = pair_for(instance)) {
        ModuleAlgebra m{pair->dual_x, pair->action};
        return {check_representation(pair->action), check_milnor(m, pair->x)};
    }
    int k = p.k.value_or(0);
    auto dual = dual_hopf(h);
    auto even = adjoint_action(h, AdjointVariant::RStar, 2 * k);
    auto odd = adjoint_action(h, AdjointVariant::LStar, 2 * k + 1);
    std::vector<VerificationReport> out{check_representation(even), check_milnor(even, dual, h),
                                        check_representation(odd), check_milnor(odd, dual, coopposite(h))};
    return out;
}

std::vector<VerificationReport> suite_multiplicative(const HopfData& h)
{
    auto dual = dual_hopf(h);
    auto k = ground_algebra(h.field);
    LinearMap eps(h.field, 1, h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        SparseVec c(h.field, 1);
        c.add(0, h.counit.coeff(i));
        eps.set_column(i, c);
    }
    auto counit = check_multiplicative(eps, h, k);
    counit.name = "counit is multiplicative";
    std::vector<VerificationReport> out{counit};
    for (std::size_t i = 0; i < h.dim(); ++i) {
        auto op = r_star(h, h.basis_vector(i));
        if (is_group_like(h, i)) {
            auto r = check_multiplicative(op, dual);
            r.name = "group-like " + h.basis[i] + " acts multiplicatively on X*";
            out.push_back(std::move(r));
        } else if (is_primitive(h, i)) {
            auto inner = check_multiplicative(op, dual);
            bool leibniz = false;
            if (inner.witness && inner.witness->indices.size() == 2) {
                auto u = inner.witness->indices[0], v = inner.witness->indices[1];
                leibniz = op.apply(dual.product(u, v)) ==
                          dual.multiply(op.column(u), dual.basis_vector(v)) + dual.multiply(dual.basis_vector(u), op.column(v));
            }
            auto r = expect_failure("primitive " + h.basis[i] + " is not multiplicative", inner);
            r.passed = r.passed && leibniz;
            r.notes.push_back(leibniz ? "witness satisfies Leibniz" : "no Leibniz witness");
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- algebra files

std::string serialize_algebra(const HopfData& h)
{
    Lines lines{{"format_version", std::to_string(kAlgebraFormatVersion)},
                {"kind", quoted("hopf")},
                {"field", quoted(h.field.name())}};
    algebra_lines(lines, h, "");
    hopf_lines(lines, h, "");
    return object_text(lines, "") + "\n";
}

HopfData parse_algebra_file(std::string_view text, ParseOptions options)
{
    Reader rd(text);
    auto obj = rd.parse();
    rd.expect_keys(obj, keys_union({kAlgebraKeys, kHopfKeys}, {"format_version", "kind", "field"}),
                   {"format_version", "kind", "field", "basis", "unit", "mult", "comult", "counit", "antipode"},
                   "algebra file");
    rd.version(obj, "hopf");
    HopfData h;
    static_cast<Algebra&>(h) = rd.algebra(obj, rd.field(obj));
    rd.hopf_parts(obj, h);
    h.validate();
    if (!options.skip_axioms)
        for (const auto& r : check_hopf_axioms(h)) {
            if (r.name.starts_with("antipode") && h.bialgebra_only)
                continue;
            if (!r.passed)
                throw Error(ErrorKind::AxiomViolation, describe(r));
        }
    return h;
}

std::string serialize_double(const DoubleAlgebra& d)
{
    Lines lines{{"format_version", std::to_string(kAlgebraFormatVersion)},
                {"kind", quoted("double")},
                {"recipe", quoted(d.recipe)},
                {"field", quoted(d.algebra.field.name())}};
    Lines first, second;
    algebra_lines(first, d.first, "  ");
    algebra_lines(second, d.second, "  ");
    lines.emplace_back("first", object_text(first, "  "));
    lines.emplace_back("second", object_text(second, "  "));
    algebra_lines(lines, d.algebra, "");
    Rows st;
    const std::size_t n1 = d.first.dim();
    for (std::size_t a = 0; a < d.straightening.size(); ++a)
        for (const auto& [k, c] : d.straightening[a])
            st.push_back({{a / n1, a % n1, k}, c});
    lines.emplace_back("straightening", entry_block(st, "  "));
    if (d.hopf)
        hopf_lines(lines, *d.hopf, "");
    return object_text(lines, "") + "\n";
}

DoubleAlgebra parse_double_file(std::string_view text)
{
    Reader rd(text);
    auto obj = rd.parse();
    rd.expect_keys(obj, keys_union({kAlgebraKeys, kHopfKeys}, {"format_version", "kind", "recipe", "field", "first", "second", "straightening"}),
                   {"format_version", "kind", "recipe", "field", "first", "second", "basis", "unit", "mult", "straightening"},
                   "double file");
    rd.version(obj, "double");
    auto f = rd.field(obj);
    DoubleAlgebra d;
    d.recipe = obj.at("recipe").get<std::string>();
    for (auto [key, target] : {std::pair{"first", &d.first}, std::pair{"second", &d.second}}) {
        Reader sub(text);
        sub.set_base(key_offset(text, key).value_or(0));
        sub.expect_keys(obj.at(key), kAlgebraKeys, {"basis", "unit", "mult"}, key);
        *target = sub.algebra(obj.at(key), f);
    }
    d.algebra = rd.algebra(obj, f);
    const std::size_t n1 = d.first.dim(), n2 = d.second.dim(), n = d.algebra.dim();
    if (n != n1 * n2)
        rd.fail("basis", std::nullopt, "double basis must have dim(first)*dim(second) elements");
    d.straightening.assign(n, SparseVec(f, n));
    rd.rows(obj, "straightening", f, {n2, n1, n},
            [&](const auto& idx, const Scalar& c) { d.straightening[idx[0] * n1 + idx[1]].add(idx[2], c); });
    for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t i = 0; i < n1; ++i)
            if (d.algebra.multiply(d.embed_second(d.second.basis_vector(j)), d.embed_first(d.first.basis_vector(i))) !=
                d.straightening[j * n1 + i])
                rd.fail("straightening", std::nullopt,
                        "straightening rule for (" + d.second.basis[j] + ", " + d.first.basis[i] +
                            ") disagrees with the multiplication");
    if (obj.contains("comult") || obj.contains("counit") || obj.contains("antipode")) {
        for (const auto* key : {"comult", "counit", "antipode"})
            if (!obj.contains(key))
                rd.fail_at(0, std::string("missing ") + key);
        HopfData h;
        static_cast<Algebra&>(h) = d.algebra;
        rd.hopf_parts(obj, h);
        d.hopf = std::move(h);
    }
    return d;
}

// ---------------------------------------------------------------- run reports

std::string report_to_json(const RunReport& r)
{
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    j["instance"] = r.instance;
    j["params"] = r.params;
    j["passed"] = r.passed();
    j["wall_time_s"] = r.wall_time_s;
    j["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back(report_json(c));
    return j.dump(2, ' ', false) + "\n";
}

RunReport report_from_json(std::string_view text)
{
    Reader rd(text);
    auto j = rd.parse();
    try {
        if (j.at("schema_version") != kReportSchemaVersion)
            throw Error(ErrorKind::ParseError, "unsupported report schema_version " + j.at("schema_version").dump());
        RunReport r;
        r.suite = j.at("suite").get<std::string>();
        r.instance = j.at("instance").get<std::string>();
        r.params = j.at("params").get<std::map<std::string, int>>();
        r.wall_time_s = j.at("wall_time_s").get<double>();
        if (!j.at("seed").is_null())
            r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back(report_from(c));
        if (j.at("passed").get<bool>() != r.passed())
            throw Error(ErrorKind::ParseError, "overall passed flag disagrees with the checks");
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
    }
}

std::string format_report(const RunReport& r)
{
    std::ostringstream out;
    out << "suite " << r.suite << " on " << r.instance;
    for (const auto& [k, v] : r.params)
        out << " " << k << "=" << v;
    out << "\n";
    for (const auto& c : r.checks)
        out << describe(c) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_time_s);
    out << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << buf << " s)\n";
    return out.str();
}

// ---------------------------------------------------------------- dispatch

std::vector<std::string> suite_names()
{
    return {"axioms", "lemma1", "lemma2", "lemma3", "lemma4", "theorem1", "double-oracle", "r-exponential", "milnor",
            "multiplicative"};
}

HopfData resolve_instance(const std::string& instance, const SuiteParams& params)
{
    HopfData h;
    if (is_file_reference(instance)) {
        h = parse_algebra_file(read_file(instance), {params.skip_axioms});
    } else {
        auto name = with_cutoff(instance, params);
        h = instance_by_name(name);
    }
    if (h.dim() > params.max_dim)
        throw Error(ErrorKind::DimensionMismatch, instance + " has dimension " + std::to_string(h.dim()) +
                                                      ", above HOPFDOUBLES_MAX_DIM=" + std::to_string(params.max_dim));
    return h;
}

RunReport run_suite(const std::string& suite, const std::string& instance, const SuiteParams& params)
{
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw Error(ErrorKind::UnknownSuite, "no suite named '" + suite + "'");
    auto start = std::chrono::steady_clock::now();
    auto h = resolve_instance(instance, params);
    std::string resolved = is_file_reference(instance) ? instance : with_cutoff(instance, params);

    RunReport r;
    r.suite = suite;
    r.instance = resolved;
    for (auto [key, value] : {std::pair{"k", params.k}, std::pair{"m", params.m}, std::pair{"l", params.l},
                              std::pair{"n", params.n}, std::pair{"k1", params.k1}, std::pair{"cutoff", params.cutoff}})
        if (value)
            r.params[key] = *value;

    if (suite == "axioms")
        r.checks = check_hopf_axioms(h);
    else if (suite == "lemma1")
        r.checks = suite_lemma1(h, params);
    else if (suite == "lemma2")
        r.checks = {verify_lemma2(h)};
    else if (suite == "lemma3")
        r.checks = suite_lemma3(h, params);
    else if (suite == "lemma4")
        r.checks = suite_lemma4(h, params);
    else if (suite == "theorem1")
        r.checks = theorem1_maps(h).reports();
    else if (suite == "double-oracle")
        r.checks = suite_double_oracle(resolved, h);
    else if (suite == "r-exponential")
        r.checks = suite_r_exponential(h);
    else if (suite == "milnor")
        r.checks = suite_milnor(resolved, h, params);
    else
        r.checks = suite_multiplicative(h);

    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::string> export_recipes()
{
    return {"o-double", "o-double-lstar", "full-double", "drinfeld"};
}

DoubleAlgebra build_export(const std::string& recipe, const std::string& instance, const SuiteParams& params)
{
    auto recipes = export_recipes();
    if (std::find(recipes.begin(), recipes.end(), recipe) == recipes.end())
        throw Error(ErrorKind::RecipeMismatch, "unknown recipe '" + recipe + "'");
    auto h = resolve_instance(instance, params);
    auto name = is_file_reference(instance) ? instance : with_cutoff(instance, params);
    if (recipe == "drinfeld")
        return build_drinfeld_double(h);
    if (recipe == "o-double") {
        if (auto pair = pair_for(name))
            return build_o_double({pair->dual_x, pair->action}, pair->x, Side::Left);
        return build_o_double({dual_hopf(h), adjoint_action(h, AdjointVariant::RStar, 0)}, h, Side::Left);
    }
    if (recipe == "o-double-lstar")
        return build_o_double({dual_hopf(h), adjoint_action(h, AdjointVariant::LStar, 0)}, h, Side::Left);
    auto rho = adjoint_action(h, AdjointVariant::RStar, 0);
    return build_full_double(dual_hopf(h), h, rho, rho);
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return 3;
    case ErrorKind::AxiomViolation:
    case ErrorKind::MilnorCheckFailed: return 1;
    default: return 2;
    }
}

}  // namespace hopfdoubles
