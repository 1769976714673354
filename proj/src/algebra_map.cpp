#include "repdim/algebra.hpp"

namespace repdim {

AlgebraMap algebra_map(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Vector>& images) {
    if (source->field() != target->field()) throw Error(ErrorCode::FieldMismatch, "algebra map across fields");
    const std::size_t ngen = source->generators().empty() ? source->dim() : source->generators().size();
    if (images.size() != ngen) throw Error(ErrorCode::DimensionMismatch, "one image per source generator");
    const auto& wb = source->word_basis();
    std::vector<Vector> word_images{target->unit()};
    for (std::size_t i = 1; i < wb.words.size(); ++i)
        word_images.push_back(target->multiply(images[wb.words[i][0]], word_images[wb.parent[i]]));

    AlgebraMap m{source, target, Matrix(source->field(), target->dim(), source->dim())};
    for (std::size_t j = 0; j < source->dim(); ++j) {
        Vector col = target->zero();
        for (std::size_t i = 0; i < word_images.size(); ++i) axpy(col, wb.change(i, j), word_images[i]);
        m.matrix.set_column(j, col);
    }

    if (m.apply(source->unit()) != target->unit()) throw Error(ErrorCode::RelationViolation, "map is not unital");
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < source->dim(); ++j) cols.push_back(m.matrix.column(j));
    for (std::size_t i = 0; i < source->dim(); ++i)
        for (std::size_t j = 0; j < source->dim(); ++j) {
            Vector prod = source->zero();
            for (const auto& t : source->product(i, j)) prod[t.k] += t.c;
            if (m.apply(prod) != target->multiply(cols[i], cols[j]))
                throw Error(ErrorCode::RelationViolation, "generator images violate the source relations");
        }
    return m;
}

AlgebraMap compose(const AlgebraMap& second, const AlgebraMap& first) {
    if (first.target->dim() != second.source->dim()) throw Error(ErrorCode::DimensionMismatch, "maps do not compose");
    return AlgebraMap{first.source, second.target, second.matrix * first.matrix};
}

} // namespace repdim
