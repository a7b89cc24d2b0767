#include <gtest/gtest.h>

#include <sstream>

#include "ferrers_lab/io.hpp"
#include "ferrers_lab/report.hpp"

using namespace ferrers;

namespace {

AnyGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(GraphFile, ReadsBipartiteWithCommentsAndOptionalPrefix) {
    auto g = parse("# example\n\nbipartite 2 3\ne 1 1\n1 2   # no prefix\ne 2 3\n");
    auto& b = std::get<BipartiteGraph>(g);
    EXPECT_EQ(b.m(), 2u);
    EXPECT_EQ(b.n(), 3u);
    EXPECT_TRUE(b.has_edge(0, 0));
    EXPECT_TRUE(b.has_edge(0, 1));
    EXPECT_TRUE(b.has_edge(1, 2));
    EXPECT_EQ(b.ecount(), 3u);
}

TEST(GraphFile, ReadsGeneral) {
    auto g = std::get<Graph>(parse("general 4\n1 2\n2 3\n3 4\n4 1\n"));
    EXPECT_EQ(g.vcount(), 4u);
    EXPECT_EQ(g.ecount(), 4u);
}

TEST(GraphFile, ErrorsNameTheLine) {
    EXPECT_EQ(error_line("bipartite 2 2\ne 1 1\ne 3 1\n"), 3u);
    EXPECT_EQ(error_line("graph 3\n"), 1u);
    EXPECT_EQ(error_line("# c\ngeneral 3\n1 1\n"), 3u);
    EXPECT_EQ(error_line("general 3\n1 2\n2 1\n"), 3u);
    EXPECT_EQ(error_line("general 3\n1 x\n"), 2u);
    EXPECT_EQ(error_line("bipartite 2\n"), 1u);
    EXPECT_EQ(error_line(""), 1u);
    try {
        parse("bipartite 2 2\n\ne 1 5\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(GraphFile, RoundTrip) {
    auto b = ferrers_from_partition(Partition{3, 3, 2, 1});
    auto back = std::get<BipartiteGraph>(parse(graph_text(AnyGraph(b))));
    EXPECT_EQ(back, b);
    Graph g(5, {Edge(0, 1), Edge(1, 4), Edge(2, 3)});
    EXPECT_EQ(std::get<Graph>(parse(graph_text(AnyGraph(g)))), g);
}

TEST(GraphFile, GeneralBipartiteGraphsConvert) {
    auto g = parse("general 4\n1 2\n2 3\n3 4\n");
    auto b = as_bipartite(g);
    EXPECT_EQ(b.m(), 2u);
    EXPECT_EQ(b.n(), 2u);
    EXPECT_EQ(b.ecount(), 3u);
    EXPECT_THROW(as_bipartite(parse("general 3\n1 2\n2 3\n1 3\n")), std::invalid_argument);
}

TEST(Json, RationalsAndFloats) {
    EXPECT_EQ(rational_json(BigRational(36)).get<std::string>(), "36/1");
    EXPECT_EQ(real_json(3.0592317570822712).dump(), "3.05923175708");
    EXPECT_EQ(real_json(-0.0).dump(), "0.0");
    EXPECT_TRUE(real_json(std::nan("")).is_null());
    auto doc = document("trees", {{"tau", "36"}});
    EXPECT_EQ(doc.begin().key(), "schema_version");
    EXPECT_EQ(doc["schema_version"], kSchemaVersion);
}

TEST(Csv, FlattensNestedDocuments) {
    Json j{{"a", 1}, {"b", {{"c", "x,y"}}}, {"d", Json::array({1, 2})}};
    EXPECT_EQ(to_csv(j), "key,value\na,1\nb.c,\"x,y\"\nd.0,1\nd.1,2\n");
}
