#include "corep/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace corep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
    throw ParseError(context.empty() ? what : context + ": " + what);
}

double number_at(const json& j, const std::string& context) {
    if (!j.is_number()) fail(context, "expected a number");
    return j.get<double>();
}

CMatrix parse_matrix(const json& j, const std::string& context) {
    if (!j.is_array() || j.empty()) fail(context, "matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    CMatrix out;
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.empty()) {
            fail(context, "row " + std::to_string(r + 1) + " is not a non-empty array");
        }
        if (r == 0) {
            cols = row.size();
            out.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (row.size() != cols) {
            fail(context, "row " + std::to_string(r + 1) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json& entry = row[c];
            if (!entry.is_array() || entry.size() != 2) {
                fail(context, "entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(c + 1) + ") must be a [re, im] pair");
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(number_at(entry[0], context), number_at(entry[1], context));
        }
    }
    require_finite(out, context);
    return out;
}

Word parse_word(const json& j, const std::string& context) {
    if (!j.is_array()) fail(context, "word must be an array of signed generator indices");
    Word w;
    for (const auto& entry : j) {
        if (!entry.is_number_integer()) fail(context, "word letters must be integers");
        const int letter = entry.get<int>();
        if (letter == 0) fail(context, "word letters are 1-based and signed; 0 is invalid");
        w.push_back(letter);
    }
    return w;
}

}  // namespace

ProblemDefinition parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");

    ProblemDefinition def;
    def.schema_version = doc.value("schema_version", 1);
    if (def.schema_version != 1) {
        throw ParseError("unsupported schema_version " + std::to_string(def.schema_version));
    }
    def.name = doc.value("name", "problem");

    if (!doc.contains("group") || !doc["group"].is_object()) {
        throw ParseError("missing group object");
    }
    const json& g = doc["group"];

    const std::string kind = g.value("kind", "finite");
    if (kind == "finite") {
        def.group.kind = GroupKind::Finite;
    } else if (kind == "sampled") {
        def.group.kind = GroupKind::Sampled;
    } else {
        throw ParseError("group.kind must be \"finite\" or \"sampled\"");
    }
    def.group.name = def.name;
    def.group.element_cap = g.value("element_cap", std::size_t{1024});

    if (g.contains("generators")) {
        if (!g["generators"].is_array()) throw ParseError("group.generators must be an array");
        std::size_t index = 0;
        for (const auto& gen : g["generators"]) {
            ++index;
            const std::string context = "generator " + std::to_string(index);
            if (!gen.is_object() || !gen.contains("matrix")) {
                fail(context, "expected an object with a matrix field");
            }
            GroupElement e;
            e.matrix = parse_matrix(gen["matrix"], context);
            e.antilinear = false;
            e.word = {static_cast<int>(index)};
            def.group.unitary_generators.push_back(std::move(e));
            def.group.generator_names.push_back(
                gen.value("name", "g" + std::to_string(index)));
        }
    }

    if (!g.contains("a0") || !g["a0"].is_object() || !g["a0"].contains("matrix")) {
        throw ParseError("group.a0 must be an object with a matrix field");
    }
    def.group.a0.matrix = parse_matrix(g["a0"]["matrix"], "a0");
    def.group.a0.antilinear = true;
    def.group.a0_name = g["a0"].value("name", "a0");
    def.group.a0_squared_word = parse_word(g.value("a0_squared_word", json::array()),
                                           "a0_squared_word");
    for (int letter : def.group.a0_squared_word) {
        if (static_cast<std::size_t>(std::abs(letter)) > def.group.unitary_generators.size()) {
            throw ParseError("a0_squared_word references generator " +
                             std::to_string(letter) + " which does not exist");
        }
    }

    if (def.group.kind == GroupKind::Sampled) {
        if (!g.contains("sampling") || !g["sampling"].is_object()) {
            throw ParseError("sampled group needs a sampling object");
        }
        const json& s = g["sampling"];
        def.group.sampling.sample_count = s.value("count", std::size_t{64});
        def.group.sampling.max_word_length = s.value("max_word_length", std::size_t{8});
        def.group.sampling.seed = s.value("seed", std::uint64_t{0});
    }

    if (!doc.contains("irreps") || !doc["irreps"].is_array() || doc["irreps"].empty()) {
        throw ParseError("problem needs a non-empty irreps array");
    }
    std::set<std::string> labels;
    for (const auto& entry : doc["irreps"]) {
        Irrep rep;
        rep.label = entry.value("label", "irrep" + std::to_string(def.irreps.size() + 1));
        const std::string context = "irrep '" + rep.label + "'";
        if (!labels.insert(rep.label).second) fail(context, "duplicate label");
        if (!entry.contains("images") || !entry["images"].is_array()) {
            fail(context, "expected an images array");
        }
        if (entry["images"].size() != def.group.unitary_generators.size()) {
            fail(context, "expected " + std::to_string(def.group.unitary_generators.size()) +
                              " images, got " + std::to_string(entry["images"].size()));
        }
        std::size_t index = 0;
        for (const auto& image : entry["images"]) {
            ++index;
            rep.generator_images.push_back(
                parse_matrix(image, context + " image " + std::to_string(index)));
        }
        rep.dimension = rep.generator_images.empty()
                            ? entry.value("dimension", Eigen::Index{1})
                            : rep.generator_images.front().rows();
        for (const auto& image : rep.generator_images) {
            if (image.rows() != rep.dimension || image.cols() != rep.dimension) {
                fail(context, "images must all be square of one dimension");
            }
        }
        def.irreps.push_back(std::move(rep));
    }

    if (doc.contains("options")) {
        const json& o = doc["options"];
        def.options.tol.abs_eps = o.value("abs_eps", def.options.tol.abs_eps);
        def.options.tol.rel_eps = o.value("rel_eps", def.options.tol.rel_eps);
        def.options.seed = o.value("seed", def.options.seed);
        def.options.phases.xi = o.value("phase_xi", 0.0);
        def.options.phases.alpha0 = o.value("phase_alpha0", 0.0);
    }
    def.options.tol.validate();

    // Eager structural validation so a bad file fails at parse time.
    validate(def.group, def.options.tol);
    for (const auto& rep : def.irreps) {
        validate(rep, def.group, def.options.tol);
    }
    return def;
}

ProblemDefinition load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading problem file: " + path);
    return parse_problem(buffer.str());
}

}  // namespace corep
