#include "cotough/json_io.hpp"

namespace cotough {

using nlohmann::json;

json to_json(const VertexSet& s) {
    return json(s.ids());
}

json to_json(const ToughnessResult& r) {
    json out;
    out["toughness"] = r.value.str();
    if (!r.value.is_infinite()) out["tough_set"] = to_json(*r.witness);
    return out;
}

json to_json(const Cotree& t) {
    if (t.op == Cotree::Op::leaf) return json(t.vertex);
    json out;
    out["type"] = t.op == Cotree::Op::join ? "join" : "union";
    json children = json::array();
    for (const auto& c : t.children) children.push_back(to_json(c));
    out["children"] = std::move(children);
    return out;
}

json to_json(const P4Witness& w) {
    json out;
    out["p4"] = {w.a, w.b, w.c, w.d};
    return out;
}

json to_json(const SbepGraph& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks) {
        json blk;
        blk["type"] = b.kind == SbepBlock::Kind::edge ? "edge" : "cycle";
        blk["vs"] = b.vertices;
        blocks.push_back(std::move(blk));
    }
    json out;
    out["blocks"] = std::move(blocks);
    return out;
}

json to_json(const PrismCycle& c) {
    json cyc = json::array();
    for (auto [v, side] : c.seq) cyc.push_back({v, side});
    json out;
    out["cycle"] = std::move(cyc);
    return out;
}

json to_json(const KWalk& w) {
    json out;
    out["k"] = w.k;
    out["walk"] = w.seq;
    return out;
}

}  // namespace cotough
