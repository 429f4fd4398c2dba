#ifndef angulation_io_hpp
#define angulation_io_hpp

#include "complex.hpp"
#include "ginzburg.hpp"
#include "quiver.hpp"
#include "report.hpp"

#include <string>

namespace angulation {

// JSON interchange.  Parsers throw SchemaError naming the offending field;
// serializers emit canonical, byte-stable text ending in a newline.
PolygonComplex parse_complex(const std::string& text);
std::string serialize_complex(const PolygonComplex& cx);

QP parse_qp(const std::string& text);
std::string serialize_qp(const QP& qp);

GinzburgPresentation parse_presentation(const std::string& text);
std::string export_presentation(const GinzburgPresentation& p);

// GraphViz view of a quiver, edges labeled by grade, deterministic order.
std::string export_dot(const GradedQuiver& q);

// Runs validate / arc count / compatibility / d-squared over a JSON corpus
// of signatures and walk lengths.  Fills summary_out with a machine-readable
// per-entry account and returns the process exit code (0 clean, 1 failures).
int batch_verify(const std::string& corpus_text, std::string& summary_out);
std::string default_corpus();

}

#endif
