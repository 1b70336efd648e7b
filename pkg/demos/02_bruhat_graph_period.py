# The quantum Bruhat graph: strong connectivity and the period (index of imprimitivity).
import io

from oc_verifier import build_c1_matrix, build_graph, canonical_cycle, export_dot, make_shape, period, strongly_connected

for k, n in [(1, 3), (2, 3), (3, 4), (4, 5)]:
    shape = make_shape(k, n)
    g = build_graph(build_c1_matrix(shape))
    print(f"{shape}: {len(g)} vertices, {g.edge_count} edges, "
          f"strongly connected {strongly_connected(g)}, period {period(g)}, r = {shape.fano_index}")

# the single-row cycle (0) -> (1) -> ... -> (2n+1-k) -> (0) has length r
cyc = canonical_cycle(make_shape(2, 3))
print("cycle:", " -> ".join(str(v) for v in cyc.vertices), cyc.edge_kinds[-1])

buf = io.StringIO()
export_dot(build_graph(build_c1_matrix(make_shape(2, 2))), buf)
print(buf.getvalue())
