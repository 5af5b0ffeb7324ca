#include "gmetric/space_json.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

namespace gmetric {

using nlohmann::json;

json space_to_json(const FiniteSpace& space) {
    json values = json::array();
    const auto& idx = space.table_index();
    for (std::size_t r = 0; r < idx.count(); ++r) {
        auto tuple = idx.unrank(r);
        json labels = json::array();
        for (int i : tuple)
            labels.push_back(space.label(i));
        values.push_back({{"tuple", labels}, {"value", space.raw_values()[r]}});
    }
    return json{{"kind", family_name(space.kind().family)},
                {"arity", space.arity()},
                {"elements", space.elements()},
                {"values", values}};
}

FiniteSpace space_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("arity") ||
        !doc.contains("elements") || !doc.contains("values"))
        throw std::invalid_argument(
            "space document needs kind, arity, elements and values");

    MetricKind kind(family_from_name(doc.at("kind").get<std::string>()),
                    doc.at("arity").get<int>());
    auto elements = doc.at("elements").get<std::vector<std::string>>();

    MultisetIndex idx(static_cast<int>(elements.size()), kind.arity);
    std::vector<std::optional<double>> slots(idx.count());

    std::unordered_map<std::string, int> by_label;
    for (int i = 0; i < (int)elements.size(); ++i)
        if (!by_label.emplace(elements[i], i).second)
            throw std::invalid_argument("duplicate element label '" + elements[i] + "'");

    for (const auto& entry : doc.at("values")) {
        const auto labels = entry.at("tuple").get<std::vector<std::string>>();
        if ((int)labels.size() != kind.arity)
            throw std::invalid_argument("tuple length does not match arity");
        std::vector<int> t;
        for (const auto& l : labels) {
            auto it = by_label.find(l);
            if (it == by_label.end())
                throw std::invalid_argument("tuple names unknown element '" + l + "'");
            t.push_back(it->second);
        }
        std::sort(t.begin(), t.end());
        const double v = entry.at("value").get<double>();
        auto& slot = slots[idx.rank(t)];
        if (slot && *slot != v)
            throw std::invalid_argument("conflicting values for one tuple");
        slot = v;
    }

    std::vector<double> values(idx.count());
    for (std::size_t r = 0; r < idx.count(); ++r) {
        if (!slots[r]) {
            auto tuple = idx.unrank(r);
            std::string miss;
            for (int i : tuple)
                miss += (miss.empty() ? "" : ",") + elements[i];
            throw std::invalid_argument("value table incomplete: missing tuple (" +
                                        miss + ")");
        }
        values[r] = *slots[r];
    }
    return FiniteSpace(std::move(elements), kind, std::move(values));
}

FiniteSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open space file: " + path);
    json doc = json::parse(in);
    return space_from_json(doc);
}

void save_space(const FiniteSpace& space, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write space file: " + path);
    out << space_to_json(space).dump(2) << "\n";
}

} // namespace gmetric
