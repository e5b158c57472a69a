#include "stanley/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

std::string strip(std::string line)
{
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const char* ws = " \t\r\n";
    auto first = line.find_first_not_of(ws);
    if (first == std::string::npos)
        return {};
    auto last = line.find_last_not_of(ws);
    return line.substr(first, last - first + 1);
}

std::vector<std::string> tokens(const std::string& text)
{
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '*') {
            if (!current.empty())
                out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        out.push_back(std::move(current));
    return out;
}

bool parse_uint(std::string_view text, unsigned& value)
{
    if (text.empty())
        return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size();
}

unsigned parse_vertex(const std::string& token, unsigned n, int line)
{
    std::string_view digits(token);
    if (!digits.empty() && (digits.front() == 'x' || digits.front() == 'X'))
        digits.remove_prefix(1);
    unsigned v = 0;
    if (!parse_uint(digits, v))
        throw ParseError(line, "cannot read vertex '" + token + "'");
    if (v < 1 || v > n)
        throw ParseError(line, "vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
    return v;
}

VertexSet parse_set(const std::string& text, unsigned n, int line)
{
    VertexSet s;
    for (const std::string& tok : tokens(text)) {
        if (tok == "{}")
            continue;
        unsigned v = parse_vertex(tok, n, line);
        if (s.contains(v))
            throw ParseError(line, "vertex " + std::to_string(v) + " repeated");
        s = s.with(v);
    }
    return s;
}

// `n=<int>` with optional blanks around '='.
bool parse_size_header(std::string text, unsigned& n)
{
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t')
            compact.push_back(c);
    if (compact.rfind("n=", 0) != 0)
        return false;
    return parse_uint(std::string_view(compact).substr(2), n);
}

std::string join_vertices(VertexSet s, const char* sep, const char* prefix)
{
    std::ostringstream os;
    bool first = true;
    for (unsigned v : s.vertices()) {
        if (!first)
            os << sep;
        os << prefix << v;
        first = false;
    }
    return os.str();
}

}  // namespace

ParsedInput parse_input(std::istream& in)
{
    std::string raw;
    int line = 0;
    std::optional<ParsedInput> result;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = strip(raw);
        if (text.empty())
            continue;
        if (!result) {
            unsigned n = 0;
            InputKind kind = InputKind::Ideal;
            std::string header = text;
            if (header.rfind("complex", 0) == 0) {
                kind = InputKind::Complex;
                header = header.substr(7);
            }
            if (!parse_size_header(header, n))
                throw ParseError(line, "expected header 'n=<int>' or 'complex n=<int>'");
            if (n < 1 || n > 64)
                throw ParseError(line, "n must be in 1..64");
            result = ParsedInput{kind, n, {}};
            continue;
        }
        if (result->kind == InputKind::Ideal && text == "1")
            result->sets.push_back(VertexSet{});
        else
            result->sets.push_back(parse_set(text, result->n, line));
    }
    if (!result)
        throw ParseError(line, "missing header");
    if (result->sets.empty())
        throw ParseError(line, result->kind == InputKind::Ideal ? "no generators" : "no facets");
    return *result;
}

MonomialIdeal read_ideal(std::istream& in)
{
    ParsedInput p = parse_input(in);
    if (p.kind == InputKind::Complex)
        return complement_ideal(SimplicialComplex::from_faces(p.n, std::move(p.sets)));
    return normalize_ideal(std::move(p.sets), p.n);
}

SimplicialComplex read_complex(std::istream& in)
{
    ParsedInput p = parse_input(in);
    if (p.kind == InputKind::Ideal)
        return complement_complex(normalize_ideal(std::move(p.sets), p.n));
    return SimplicialComplex::from_faces(p.n, std::move(p.sets));
}

std::string format_set(VertexSet s)
{
    return s.empty() ? "{}" : join_vertices(s, " ", "");
}

std::string format_monomial(VertexSet s)
{
    return s.empty() ? "1" : join_vertices(s, "*", "x");
}

void write_ideal(std::ostream& out, const MonomialIdeal& ideal)
{
    out << "n=" << ideal.n() << '\n';
    for (VertexSet g : ideal.generators())
        out << format_monomial(g) << '\n';
}

void write_complex(std::ostream& out, const SimplicialComplex& complex)
{
    out << "complex n=" << complex.n() << '\n';
    for (VertexSet f : complex.facets())
        out << format_set(f) << '\n';
}

void write_certificate(std::ostream& out, const CollapseCertificate& certificate)
{
    if (const auto* sdr = std::get_if<Sdr>(&certificate)) {
        out << "SDR\n";
        for (const SdrEntry& e : sdr->entries)
            out << "facet " << format_set(e.facet) << " drop " << e.dropped << '\n';
        return;
    }
    out << "VIOLATOR\n";
    for (VertexSet f : std::get<Violator>(certificate).facets)
        out << format_set(f) << '\n';
}

void write_partition(std::ostream& out, const IntervalPartition& partition)
{
    out << "PARTITION k=" << partition.cap << '\n';
    for (const Interval& iv : partition.intervals)
        out << "interval " << format_set(iv.bottom) << " -> " << format_set(iv.top) << '\n';
}

Certificate parse_certificate(std::istream& in)
{
    enum class Mode { Searching, Sdr, Violator, Partition } mode = Mode::Searching;
    Sdr sdr;
    Violator violator;
    IntervalPartition partition;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = strip(raw);
        if (text.empty())
            continue;
        switch (mode) {
        case Mode::Searching:
            if (text == "SDR") {
                mode = Mode::Sdr;
            } else if (text == "VIOLATOR") {
                mode = Mode::Violator;
            } else if (text.rfind("PARTITION", 0) == 0) {
                std::string rest = text.substr(9);
                auto eq = rest.find('=');
                std::string key = strip(rest.substr(0, eq == std::string::npos ? 0 : eq));
                if (eq == std::string::npos || key != "k" ||
                    !parse_uint(strip(rest.substr(eq + 1)), partition.cap))
                    throw ParseError(line, "expected 'PARTITION k=<int>'");
                mode = Mode::Partition;
            }
            break;
        case Mode::Sdr: {
            auto drop = text.find(" drop ");
            if (text.rfind("facet ", 0) != 0 || drop == std::string::npos)
                throw ParseError(line, "expected 'facet <set> drop <vertex>'");
            VertexSet facet = parse_set(text.substr(6, drop - 6), 64, line);
            unsigned v = 0;
            if (!parse_uint(strip(text.substr(drop + 6)), v))
                throw ParseError(line, "cannot read dropped vertex");
            sdr.entries.push_back({facet, v});
            break;
        }
        case Mode::Violator:
            violator.facets.push_back(parse_set(text, 64, line));
            break;
        case Mode::Partition: {
            auto arrow = text.find("->");
            if (text.rfind("interval ", 0) != 0 || arrow == std::string::npos)
                throw ParseError(line, "expected 'interval <set> -> <set>'");
            VertexSet bottom = parse_set(text.substr(9, arrow - 9), 64, line);
            VertexSet top = parse_set(text.substr(arrow + 2), 64, line);
            partition.intervals.push_back({bottom, top});
            break;
        }
        }
    }
    switch (mode) {
    case Mode::Sdr:
        return CollapseCertificate{std::move(sdr)};
    case Mode::Violator:
        return CollapseCertificate{std::move(violator)};
    case Mode::Partition:
        return partition;
    default:
        throw ParseError(line, "no SDR, VIOLATOR or PARTITION block found");
    }
}

void Record::write(std::ostream& out) const
{
    for (const auto& [key, value] : fields_)
        out << key << " = " << value << '\n';
}

void add_certificate(Record& record, const std::string& prefix, const CollapseCertificate& certificate)
{
    if (const auto* sdr = std::get_if<Sdr>(&certificate)) {
        record.add(prefix + ".kind", "sdr");
        record.add(prefix + ".size", sdr->entries.size());
        for (std::size_t i = 0; i < sdr->entries.size(); ++i) {
            record.add(prefix + ".entry." + std::to_string(i) + ".facet", format_set(sdr->entries[i].facet));
            record.add(prefix + ".entry." + std::to_string(i) + ".drop", sdr->entries[i].dropped);
        }
        return;
    }
    const auto& facets = std::get<Violator>(certificate).facets;
    record.add(prefix + ".kind", "violator");
    record.add(prefix + ".size", facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
        record.add(prefix + ".facet." + std::to_string(i), format_set(facets[i]));
}

void add_partition(Record& record, const std::string& prefix, const IntervalPartition& partition)
{
    record.add(prefix + ".cap", partition.cap);
    record.add(prefix + ".size", partition.intervals.size());
    for (std::size_t i = 0; i < partition.intervals.size(); ++i) {
        const Interval& iv = partition.intervals[i];
        record.add(prefix + ".interval." + std::to_string(i), format_set(iv.bottom) + " -> " + format_set(iv.top));
    }
}

}  // namespace stanley
