import init, { realDimension, padicSpectrum, formalDimensionTable } from "./pkg/vndim_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function show(target, f) {
  try {
    target.innerHTML = f();
  } catch (e) {
    target.innerHTML = `<p class="err">${e}</p>`;
  }
}

function table(header, rows, rowClass = () => "") {
  const head = header.map((h) => `<th>${h}</th>`).join("");
  const body = rows
    .map((r) => `<tr class="${rowClass(r)}">${r.cells.map((c) => `<td>${c ?? "-"}</td>`).join("")}</tr>`)
    .join("");
  return `<table><tr>${head}</tr>${body}</table>`;
}

function renderReal() {
  show($("real-out"), () => {
    const v = JSON.parse(realDimension($("sig").value, num("k"), $("h2").value));
    return `<p>covol = <output>${v.covolume}</output>, d<sub>k</sub> = <output>${v.formal_dimension}</output>,
      product = <output>${v.vn_dimension}</output> (≈ ${v.approx.toPrecision(8)})</p>`;
  });
}

function renderSpectrum() {
  show($("spectrum-out"), () => {
    const v = JSON.parse(padicSpectrum(num("sq"), num("sn"), num("sk")));
    const rows = v.entries.map((e) => ({ family: e.family, cells: [e.value, e.family, e.k, e.label] }));
    return table(["value", "family", "k", "witness"], rows, (r) => r.family);
  });
}

function renderTable() {
  show($("table-out"), () => {
    const v = JSON.parse(formalDimensionTable(num("tq"), num("ti")));
    const rows = v.rows.map((r) => ({ cells: [r.label, r.dim_lambda, r.vol_j_mod_z, r.formal_dimension] }));
    return table(["label", "dim Λ", "vol(J/Z)", "d"], rows);
  });
}

await init();
for (const id of ["sig", "k", "h2"]) $(id).addEventListener("input", renderReal);
for (const id of ["sq", "sn", "sk"]) $(id).addEventListener("input", renderSpectrum);
for (const id of ["tq", "ti"]) $(id).addEventListener("input", renderTable);
renderReal();
renderSpectrum();
renderTable();
