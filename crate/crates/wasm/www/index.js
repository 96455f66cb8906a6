import init, { starTable, products, longest } from "./pkg/coxstar_wasm.js";

const $ = (id) => document.getElementById(id);
const show = (el, f) => {
  el.classList.remove("error");
  try {
    f();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e.message ?? e);
  }
};
const label = (j) => (j.length ? j.join(",") : "-");

function renderTable() {
  const out = $("table-out");
  $("table-flags").textContent = "";
  show(out, () => {
    const t = JSON.parse(starTable($("table-type").value));
    const n = 1 << t.rank;
    const heads = t.entries.slice(0, n).map((e) => label(e.j2));
    let html = "<table><tr><th>J1 \\ J2</th>" + heads.map((h) => `<th>${h}</th>`).join("") + "</tr>";
    for (let r = 0; r < n; r++) {
      const row = t.entries.slice(r * n, (r + 1) * n);
      html += `<tr><th>${label(row[0].j1)}</th>`;
      for (const e of row) {
        html += `<td class="${e.star.length ? "nonempty" : "empty"}">${label(e.star)}</td>`;
      }
      html += "</tr>";
    }
    out.innerHTML = html + "</table>";
    const v = t.verified;
    $("table-flags").textContent =
      `closure ${v.closure}, commutative ${v.commutative}, containment ${v.containment}, closed form ${v.closed_form_match}`;
  });
}

function renderProducts() {
  const out = $("prod-out");
  show(out, () => {
    const [s, d] = products($("prod-type").value, $("prod-x").value, $("prod-y").value).split("\n");
    out.textContent = `x * y = ${s}\nx ▷ y = ${d}`;
  });
}

function renderLongest() {
  const out = $("long-out");
  show(out, () => {
    const [w, len] = longest($("long-type").value, $("long-j").value).split("\n");
    out.textContent = `${w}\nlength ${len}`;
  });
}

await init();
$("table-go").onclick = renderTable;
$("prod-go").onclick = renderProducts;
$("long-go").onclick = renderLongest;
renderTable();
renderProducts();
renderLongest();
