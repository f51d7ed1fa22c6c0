import init, { set_obstructions, opengraph_obstructions, gf2_obstructions } from "./pkg/obstructia_web.js";

const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  parent.appendChild(node);
  return node;
}

// One row per level, basepoint at the bottom.
function hasse(diagram, target) {
  target.replaceChildren();
  if (!diagram) return;
  const rows = [];
  diagram.nodes.forEach((n, i) => (rows[n.level] ??= []).push(i));
  const gapX = 110, gapY = 70, pad = 40;
  const width = Math.max(...rows.map((r) => r.length)) * gapX + 2 * pad;
  const height = (rows.length - 1) * gapY + 2 * pad;
  const pos = [];
  rows.forEach((row, level) => {
    row.forEach((i, k) => {
      pos[i] = [pad + (k + 0.5) * (width - 2 * pad) / row.length, height - pad - level * gapY];
    });
  });
  const svg = el("svg", { width, height }, target);
  for (const [a, b] of diagram.covers) {
    el("line", { x1: pos[a][0], y1: pos[a][1], x2: pos[b][0], y2: pos[b][1], stroke: "#888" }, svg);
  }
  diagram.nodes.forEach((n, i) => {
    el("circle", { cx: pos[i][0], cy: pos[i][1], r: 5, fill: n.basepoint ? "#000" : "#fff", stroke: "#000" }, svg);
    el("text", { x: pos[i][0] + 8, y: pos[i][1] - 6 }, svg).textContent = n.name;
  });
}

function show(section, json) {
  const doc = JSON.parse(json);
  const out = section.querySelector("pre");
  if (doc.error) {
    out.textContent = doc.error;
    hasse(null, section.querySelector(".plot"));
    return;
  }
  const lines = [doc.summary, `minimal: ${doc.minimal.join(" ")}`];
  if (!doc.diagram) lines.push(`${doc.elements} elements, too many to draw`);
  out.textContent = lines.join("\n");
  hasse(doc.diagram, section.querySelector(".plot"));
}

function level(name) {
  return Number(document.querySelector(`input[name=${name}]:checked`).value);
}

function wire(id, compute) {
  const section = document.getElementById(id);
  const run = () => show(section, compute(section));
  section.querySelector("button").addEventListener("click", run);
  run();
}

await init();
wire("set", (s) => set_obstructions(s.querySelector("textarea").value, level("set-level")));
wire("graphs", (s) => {
  const [g, h] = s.querySelectorAll("textarea");
  return opengraph_obstructions(g.value, h.value, level("graph-level"));
});
wire("states", (s) => {
  const [a, b] = s.querySelectorAll("input[type=number]");
  return gf2_obstructions(Number(a.value), Number(b.value), level("states-level"));
});
