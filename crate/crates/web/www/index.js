import init, { truthTable, evaluate, solve } from "./pkg/x5_web.js";

const $ = (id) => document.getElementById(id);
const mode = (name) => document.querySelector(`input[name=${name}]:checked`).value;

function fail(target, result) {
  target.textContent = result.error;
  target.className = "error";
  return true;
}

function renderTable() {
  const out = $("table-out");
  const result = JSON.parse(truthTable($("table-expr").value, mode("table-mode")));
  if (result.error && fail(out, result)) return;
  out.className = "";
  const table = document.createElement("table");
  const head = table.insertRow();
  const [row, column] = result.atoms;
  head.insertCell().outerHTML = `<th>${row ?? ""}${column ? " \\ " + column : ""}</th>`;
  for (const v of column ? result.values : [result.formula]) {
    head.insertCell().outerHTML = `<th>${v}</th>`;
  }
  result.cells.forEach((cells, i) => {
    const line = table.insertRow();
    line.insertCell().outerHTML = `<th>${row ? result.values[i] : ""}</th>`;
    for (const v of cells) {
      const cell = line.insertCell();
      cell.textContent = v;
      if (v === 2) cell.className = "designated";
    }
  });
  out.replaceChildren(table);
}

function renderEval() {
  const out = $("eval-out");
  const result = JSON.parse(evaluate($("eval-expr").value, $("eval-values").value, mode("eval-mode")));
  if (result.error && fail(out, result)) return;
  out.className = "";
  out.textContent =
    `${result.formula}\nvalue ${result.value}${result.designated ? " (designated)" : ""}\n` +
    `here ${result.here}\nthere ${result.there}`;
}

function renderSolve() {
  const out = $("solve-out");
  const result = JSON.parse(solve($("solve-src").value));
  if (result.error && fail(out, result)) return;
  out.className = "";
  const models = result.models.length ? result.models.join("\n") : "no equilibrium models";
  const engines = Object.entries(result.engines).map(([name, found]) => `${name}: ${found.join(", ") || "none"}`);
  out.textContent = `${models}\n\n${engines.join("\n")}\n${result.agreement ? "engines agree" : "ENGINES DISAGREE"}`;
}

await init();
$("table-run").onclick = renderTable;
$("eval-run").onclick = renderEval;
$("solve-run").onclick = renderSolve;
renderTable();
renderEval();
renderSolve();
