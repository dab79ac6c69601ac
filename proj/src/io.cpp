#include "recmat/io.hpp"

#include <fstream>
#include <sstream>

namespace recmat::io {

namespace {

constexpr const char* kMagic = "recmat-presentation v1";
constexpr const char* kShiftKeys[4] = {"00", "01", "10", "11"};

}  // namespace

void write_presentation(std::ostream& os, const Presentation& p) {
    os << kMagic << "\n";
    os << "field " << p.field().str() << "\n";
    os << "dim " << p.dim() << "\n";
    if (!p.state_names().empty()) {
        os << "states";
        for (const auto& n : p.state_names()) os << ' ' << n;
        os << "\n";
    }
    os << "init";
    for (const auto& s : p.init()) os << ' ' << s.str();
    os << "\n";
    for (int st = 0; st < 4; ++st) {
        os << "shift " << kShiftKeys[st] << "\n";
        const DenseMatrix& m = p.shift_matrix(st >> 1, st & 1);
        for (int i = 0; i < p.dim(); ++i) {
            for (int j = 0; j < p.dim(); ++j) os << (j ? " " : "") << m.at(i, j).str();
            os << "\n";
        }
    }
    os << "select";
    for (const auto& s : p.select()) os << ' ' << s.str();
    os << "\n";
}

std::string presentation_to_string(const Presentation& p) {
    std::ostringstream os;
    write_presentation(os, p);
    return os.str();
}

namespace {

struct LineReader {
    std::istream& is;
    std::size_t lineno = 0;

    std::string next() {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw ParseError("unexpected end of presentation document", lineno);
    }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace

Presentation read_presentation(std::istream& is) {
    LineReader r{is};
    if (r.next() != kMagic) throw ParseError("missing presentation header", r.lineno);
    auto field_line = tokens(r.next());
    if (field_line.size() != 2 || field_line[0] != "field")
        throw ParseError("expected 'field <tag>'", r.lineno);
    Field f = Field::parse(field_line[1]);
    auto dim_line = tokens(r.next());
    if (dim_line.size() != 2 || dim_line[0] != "dim")
        throw ParseError("expected 'dim <n>'", r.lineno);
    int dim = std::stoi(dim_line[1]);
    if (dim < 0) throw ParseError("negative dim", r.lineno);

    std::vector<std::string> names;
    std::string line = r.next();
    auto head = tokens(line);
    if (!head.empty() && head[0] == "states") {
        names.assign(head.begin() + 1, head.end());
        if (static_cast<int>(names.size()) != dim)
            throw ParseError("states line must list dim names", r.lineno);
        line = r.next();
        head = tokens(line);
    }
    if (head.empty() || head[0] != "init" ||
        static_cast<int>(head.size()) != dim + 1)
        throw ParseError("expected 'init' with dim values", r.lineno);
    std::vector<Scalar> init;
    for (int i = 0; i < dim; ++i) init.push_back(Scalar::parse(head[1 + i], f));

    std::array<DenseMatrix, 4> sh{DenseMatrix(f, dim, dim), DenseMatrix(f, dim, dim),
                                  DenseMatrix(f, dim, dim), DenseMatrix(f, dim, dim)};
    for (int st = 0; st < 4; ++st) {
        auto hdr = tokens(r.next());
        if (hdr.size() != 2 || hdr[0] != "shift" || hdr[1] != kShiftKeys[st])
            throw ParseError(std::string("expected 'shift ") + kShiftKeys[st] + "'",
                             r.lineno);
        for (int i = 0; i < dim; ++i) {
            auto row = tokens(r.next());
            if (static_cast<int>(row.size()) != dim)
                throw ParseError("shift row must hold dim values", r.lineno);
            for (int j = 0; j < dim; ++j) sh[st].at(i, j) = Scalar::parse(row[j], f);
        }
    }
    auto sel_line = tokens(r.next());
    if (sel_line.empty() || sel_line[0] != "select" ||
        static_cast<int>(sel_line.size()) != dim + 1)
        throw ParseError("expected 'select' with dim values", r.lineno);
    std::vector<Scalar> sel;
    for (int i = 0; i < dim; ++i) sel.push_back(Scalar::parse(sel_line[1 + i], f));
    return Presentation(f, dim, std::move(init), std::move(sh), std::move(sel),
                        std::move(names));
}

Presentation presentation_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_presentation(is);
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file: " + path);
    return read_presentation(in);
}

void save_presentation_file(const std::string& path, const Presentation& p) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write presentation file: " + path);
    write_presentation(out, p);
}

}  // namespace recmat::io
