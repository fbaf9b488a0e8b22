#include <urd/certificate.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace urd::certificate {

using nlohmann::ordered_json;

std::string to_json(Design d) {
    canonicalize(d);
    ordered_json doc;
    doc["kind"] = std::string(design_kind_name(d.kind));
    doc["v"] = d.v;
    doc["groups"] = d.layout.groups;
    doc["hole"] = d.layout.hole;
    doc["profile"] = {{"r", d.profile.r}, {"s", d.profile.s}, {"t", d.profile.t}};
    if (d.cycle)
        doc["context"] = {{"type", "cycle-blowup"},
                          {"positions", d.cycle->positions},
                          {"copies", d.cycle->copies}};
    ordered_json classes = ordered_json::array();
    for (const auto& c : d.classes) {
        ordered_json jc;
        jc["block_kind"] = std::string(kind_name(c.kind));
        jc["scope"] = std::string(scope_name(c.scope));
        if (c.scope == Scope::PartialGroup)
            jc["missing_group"] = c.missing_group;
        else
            jc["missing_group"] = nullptr;
        ordered_json blocks = ordered_json::array();
        for (const auto& b : c.blocks) blocks.push_back(b.verts);
        jc["blocks"] = std::move(blocks);
        classes.push_back(std::move(jc));
    }
    doc["classes"] = std::move(classes);
    return doc.dump(1, ' ') + "\n";
}

Design from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("certificate parse error: ") + e.what());
    }
    auto fail = [](const std::string& what) -> void {
        throw std::runtime_error("malformed certificate: " + what);
    };
    Design d;
    if (!doc.contains("kind") || !doc["kind"].is_string()) fail("missing kind");
    auto dk = design_kind_from_name(doc["kind"].get<std::string>());
    if (!dk) fail("unknown design kind " + doc["kind"].get<std::string>());
    d.kind = *dk;
    if (!doc.contains("v") || !doc["v"].is_number_integer()) fail("missing v");
    d.v = doc["v"].get<int>();
    if (doc.contains("groups"))
        d.layout.groups = doc["groups"].get<std::vector<std::vector<Vertex>>>();
    if (doc.contains("hole")) d.layout.hole = doc["hole"].get<std::vector<Vertex>>();
    if (!doc.contains("profile")) fail("missing profile");
    d.profile = {doc["profile"].value("r", 0), doc["profile"].value("s", 0),
                 doc["profile"].value("t", 0)};
    if (doc.contains("context") && !doc["context"].is_null()) {
        const auto& ctx = doc["context"];
        if (ctx.value("type", std::string()) != "cycle-blowup") fail("unknown context type");
        d.cycle = CycleContext{ctx.value("positions", 0), ctx.value("copies", 0)};
    }
    if (!doc.contains("classes") || !doc["classes"].is_array()) fail("missing classes");
    for (const auto& jc : doc["classes"]) {
        ResolutionClass c;
        auto bk = kind_from_name(jc.value("block_kind", std::string()));
        if (!bk) fail("unknown block kind");
        c.kind = *bk;
        auto sc = scope_from_name(jc.value("scope", std::string()));
        if (!sc) fail("unknown scope");
        c.scope = *sc;
        if (c.scope == Scope::PartialGroup) {
            if (!jc.contains("missing_group") || !jc["missing_group"].is_number_integer())
                fail("partial-group class without missing_group");
            c.missing_group = jc["missing_group"].get<int>();
        }
        if (!jc.contains("blocks") || !jc["blocks"].is_array()) fail("class without blocks");
        for (const auto& jb : jc["blocks"]) {
            Block b;
            b.kind = c.kind;
            b.verts = jb.get<std::vector<Vertex>>();
            c.blocks.push_back(std::move(b));
        }
        d.classes.push_back(std::move(c));
    }
    return d;
}

void save(const Design& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(d);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Design load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

} // namespace urd::certificate
