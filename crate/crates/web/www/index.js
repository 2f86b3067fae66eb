import init, { catalog_entries, analyze_entry, analyze_custom, geodesic } from "../pkg/lorhom3_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#1f77b4", "#d62728", "#2ca02c"];

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e);
  }
}

const fmt = (v) => (v !== null && typeof v === "object" ? JSON.stringify(v) : String(v ?? ""));

function summary(json) {
  const r = JSON.parse(json);
  const c = r.classification;
  const lines = [
    `group:            ${r.group} (${r.basis.join(", ")})`,
    `geometry class:   ${fmt(c.geometry_class)}`,
    `maximal geometry: ${fmt(c.maximal_geometry)}`,
    `isotropy:         dim ${c.isotropy_dim} ${fmt(c.isotropy_type)}`,
    `flat:             ${c.curvature.flat}`,
    `completeness:     ${fmt(c.completeness_flag)}`,
    "",
    "connection (nonzero):",
  ];
  for (const l of r.connection) {
    if (l.value.some((q) => q !== "0")) {
      lines.push(`  ∇_${l.along} ${l.of} = (${l.value.join(", ")})`);
    }
  }
  return lines.join("\n");
}

function plot(traj) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const s = traj.samples;
  const tMax = s[s.length - 1].t || 1;
  const clip = 10;
  const y = (v) => canvas.height / 2 - (Math.max(-clip, Math.min(clip, v)) / clip) * (canvas.height / 2 - 10);
  const x = (t) => 10 + (t / tMax) * (canvas.width - 20);
  ctx.strokeStyle = "#ccc";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(canvas.width, y(0));
  ctx.stroke();
  for (let k = 0; k < s[0].v.length; k++) {
    ctx.strokeStyle = COLORS[k % COLORS.length];
    ctx.beginPath();
    s.forEach((p, i) => (i ? ctx.lineTo(x(p.t), y(p.v[k])) : ctx.moveTo(x(p.t), y(p.v[k]))));
    ctx.stroke();
  }
}

function integrate() {
  const out = $("geo-summary");
  show(out, () => {
    const v0 = $("v0").value.split(",").map(Number);
    const r = JSON.parse(geodesic($("geo-entry").value, new Float64Array(v0), Number($("t-max").value), 1e-9));
    plot(r.trajectory);
    const o = r.trajectory.outcome;
    const end = o.kind === "BlowupDetected" ? `blowup in [${o.t_low.toFixed(6)}, ${o.t_high.toFixed(6)}]` : "reached horizon";
    const legend = r.basis.map((b, k) => `${b}: ${COLORS[k]}`).join(", ");
    return `${end}; ${r.trajectory.accepted} steps; body velocity clipped to ±10 (${legend})`;
  });
}

await init();
const entries = JSON.parse(catalog_entries());
for (const id of ["entry", "group", "geo-entry"]) {
  for (const e of entries) $(id).add(new Option(e.name, e.name));
}
$("group").value = "lorentz_sol";
$("geo-entry").value = "lorentz_sol";
const basisOf = () => entries.find((e) => e.name === $("group").value).basis.join(", ");
$("group-basis").textContent = basisOf();
$("group").onchange = () => ($("group-basis").textContent = basisOf());
$("analyze-entry").onclick = () => show($("entry-out"), () => summary(analyze_entry($("entry").value)));
$("analyze-custom").onclick = () =>
  show($("custom-out"), () => summary(analyze_custom($("group").value, $("gram").value)));
$("integrate").onclick = integrate;
