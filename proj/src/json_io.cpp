#include "qgda/json_io.hpp"

#include <fstream>

#include "qgda/errors.hpp"

namespace qgda {

namespace {

const Json& expect_key(const Json& j, const char* key, const char* what) {
    if (!j.is_object())
        throw Error(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw Error(std::string(what) + ": missing key \"" + key + "\"");
    return *it;
}

long expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw Error(std::string(what) + ": expected an integer");
    return j.get<long>();
}

Rational fraction_from_json(const Json& j, const char* what) {
    if (!j.is_string())
        throw Error(std::string(what) + ": expected a fraction string");
    return Rational::from_string(j.get<std::string>());
}

Json coeff_to_json(const CyclotomicNumber& c) {
    Json out = Json::array();
    for (const auto& r : c.coords()) out.push_back(r.to_fraction_string());
    return out;
}

CyclotomicNumber coeff_from_json(const Json& j,
                                 const CyclotomicField::Ptr& field,
                                 const char* what) {
    if (!j.is_array())
        throw Error(std::string(what) + ": expected a coordinate array");
    if (static_cast<int>(j.size()) != field->degree())
        throw Error(std::string(what) + ": expected " +
                    std::to_string(field->degree()) +
                    " coordinates, got " + std::to_string(j.size()));
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (const auto& entry : j) coords.push_back(fraction_from_json(entry, what));
    return field->from_coords(std::move(coords));
}

BaseAlgebra::Coords coords_from_json(const Json& j,
                                     const BaseAlgebra::Ptr& algebra,
                                     const char* what) {
    if (!j.is_array())
        throw Error(std::string(what) + ": expected an array of coefficients");
    if (static_cast<int>(j.size()) != algebra->dim())
        throw Error(std::string(what) + ": expected " +
                    std::to_string(algebra->dim()) + " coefficients, got " +
                    std::to_string(j.size()));
    BaseAlgebra::Coords coords;
    coords.reserve(j.size());
    for (const auto& entry : j)
        coords.push_back(coeff_from_json(entry, algebra->field(), what));
    return coords;
}

Json coords_to_json(const BaseAlgebra::Coords& coords) {
    Json out = Json::array();
    for (const auto& c : coords) out.push_back(coeff_to_json(c));
    return out;
}

}  // namespace

Json scalar_to_json(const CyclotomicNumber& c) {
    return Json{{"n", c.n()}, {"coords", coeff_to_json(c)}};
}

CyclotomicNumber scalar_from_json(const Json& j) {
    const long n = expect_int(expect_key(j, "n", "scalar"), "scalar n");
    if (n < 1) throw Error("scalar: n must be positive");
    auto field = CyclotomicField::make(static_cast<int>(n));
    return coeff_from_json(expect_key(j, "coords", "scalar"), field,
                           "scalar coords");
}

Json base_element_to_json(const BaseElement& u) {
    return Json{{"coords", coords_to_json(u.coords())}};
}

BaseElement base_element_from_json(const Json& j,
                                   const BaseAlgebra::Ptr& algebra) {
    return algebra->element(coords_from_json(
        expect_key(j, "coords", "base element"), algebra, "base element"));
}

Json ext_element_to_json(const ExtElement& xi) {
    Json parts = Json::array();
    for (const auto& part : xi.parts())
        parts.push_back(base_element_to_json(part));
    return Json{{"parts", std::move(parts)}};
}

ExtElement ext_element_from_json(const Json& j,
                                 const ExtAlgebra::Ptr& algebra) {
    const Json& parts = expect_key(j, "parts", "extension element");
    if (!parts.is_array())
        throw Error("extension element: \"parts\" must be an array");
    if (static_cast<int>(parts.size()) != algebra->n())
        throw Error("extension element: expected " +
                    std::to_string(algebra->n()) + " parts, got " +
                    std::to_string(parts.size()));
    std::vector<BaseElement> out;
    out.reserve(parts.size());
    for (const auto& part : parts)
        out.push_back(base_element_from_json(part, algebra->base()));
    return algebra->from_parts(std::move(out));
}

Json form_to_json(const KForm& form) {
    return Json{{"degree", form.degree()},
                {"basis", form.basis() == FormBasis::TauPower ? "tau" : "dx"},
                {"coeff", base_element_to_json(form.coeff())}};
}

KForm form_from_json(const Json& j, const ExtAlgebra::Ptr& algebra) {
    const long degree = expect_int(expect_key(j, "degree", "form"),
                                   "form degree");
    if (degree < 0 || degree >= algebra->n())
        throw Error("form: degree out of range");
    const Json& basis_j = expect_key(j, "basis", "form");
    if (!basis_j.is_string()) throw Error("form: \"basis\" must be a string");
    const std::string basis_name = basis_j.get<std::string>();
    FormBasis basis;
    if (basis_name == "tau") {
        basis = FormBasis::TauPower;
    } else if (basis_name == "dx") {
        basis = FormBasis::DxPower;
    } else {
        throw Error("form: basis must be \"tau\" or \"dx\"");
    }
    BaseElement coeff = base_element_from_json(expect_key(j, "coeff", "form"),
                                               algebra->base());
    return KForm(algebra, static_cast<int>(degree), basis, std::move(coeff));
}

Json algebra_to_json(const BaseAlgebra::Ptr& algebra, int sign) {
    const int dim = algebra->dim();
    Json structure = Json::array();
    for (int i = 0; i < dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < dim; ++j) {
            Json product = Json::array();
            for (int k = 0; k < dim; ++k)
                product.push_back(coeff_to_json(algebra->structure(i, j, k)));
            row.push_back(std::move(product));
        }
        structure.push_back(std::move(row));
    }
    // Emitted per twisted basis vector; the in-memory layout is row-major
    // over target indices, so this transposes.
    Json twist = Json::array();
    for (int j = 0; j < dim; ++j) {
        Json image = Json::array();
        for (int i = 0; i < dim; ++i)
            image.push_back(coeff_to_json(algebra->twist_matrix()[i][j]));
        twist.push_back(std::move(image));
    }
    return Json{{"n", algebra->n()},
                {"sign", sign},
                {"dim", dim},
                {"basis", algebra->basis_names()},
                {"structure", std::move(structure)},
                {"unit", coords_to_json(algebra->unit_coords())},
                {"twist", std::move(twist)}};
}

AlgebraFile algebra_from_json(const Json& j) {
    const long n = expect_int(expect_key(j, "n", "algebra"), "algebra n");
    if (n < 2) throw Error("algebra: n must be at least 2");
    const long sign = expect_int(expect_key(j, "sign", "algebra"),
                                 "algebra sign");
    if (sign != 1 && sign != -1) throw Error("algebra: sign must be 1 or -1");
    const long dim = expect_int(expect_key(j, "dim", "algebra"),
                                "algebra dim");
    if (dim < 1) throw Error("algebra: dim must be positive");

    const Json& basis = expect_key(j, "basis", "algebra");
    if (!basis.is_array() || static_cast<long>(basis.size()) != dim)
        throw Error("algebra: \"basis\" must list exactly dim names");
    std::vector<std::string> names;
    names.reserve(basis.size());
    for (const auto& entry : basis) {
        if (!entry.is_string())
            throw Error("algebra: basis names must be strings");
        names.push_back(entry.get<std::string>());
    }

    auto field = CyclotomicField::make(static_cast<int>(n));

    const Json& structure = expect_key(j, "structure", "algebra");
    if (!structure.is_array() || static_cast<long>(structure.size()) != dim)
        throw Error("algebra: \"structure\" must have one row per basis vector");
    std::vector<std::vector<BaseAlgebra::Coords>> table;
    table.reserve(structure.size());
    for (const auto& row : structure) {
        if (!row.is_array() || static_cast<long>(row.size()) != dim)
            throw Error("algebra: each structure row needs dim entries");
        std::vector<BaseAlgebra::Coords> table_row;
        table_row.reserve(row.size());
        for (const auto& product : row) {
            if (!product.is_array() ||
                static_cast<long>(product.size()) != dim)
                throw Error("algebra: each product needs dim coefficients");
            BaseAlgebra::Coords coords;
            coords.reserve(product.size());
            for (const auto& coeff : product)
                coords.push_back(
                    coeff_from_json(coeff, field, "algebra structure"));
            table_row.push_back(std::move(coords));
        }
        table.push_back(std::move(table_row));
    }

    const Json& unit = expect_key(j, "unit", "algebra");
    if (!unit.is_array() || static_cast<long>(unit.size()) != dim)
        throw Error("algebra: \"unit\" needs dim coefficients");
    BaseAlgebra::Coords unit_coords;
    unit_coords.reserve(unit.size());
    for (const auto& coeff : unit)
        unit_coords.push_back(coeff_from_json(coeff, field, "algebra unit"));

    const Json& twist = expect_key(j, "twist", "algebra");
    if (!twist.is_array() || static_cast<long>(twist.size()) != dim)
        throw Error("algebra: \"twist\" needs one image per basis vector");
    std::vector<BaseAlgebra::Coords> twist_matrix(
        static_cast<std::size_t>(dim),
        BaseAlgebra::Coords(static_cast<std::size_t>(dim), field->zero()));
    for (long jcol = 0; jcol < dim; ++jcol) {
        const Json& image = twist[jcol];
        if (!image.is_array() || static_cast<long>(image.size()) != dim)
            throw Error("algebra: each twist image needs dim coefficients");
        for (long i = 0; i < dim; ++i)
            twist_matrix[i][jcol] =
                coeff_from_json(image[i], field, "algebra twist");
    }

    auto base = BaseAlgebra::create(std::move(field), std::move(names),
                                    std::move(table), std::move(unit_coords),
                                    std::move(twist_matrix), "custom");
    return AlgebraFile{std::move(base), static_cast<int>(sign)};
}

AlgebraFile algebra_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read algebra file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("malformed JSON in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

}  // namespace qgda
