import init, { annotate, detectLanguage, wordCloud } from "./pkg/quotekit_web.js";

const $ = (id) => document.getElementById(id);
let corpus = "";

function runAnnotate() {
  corpus = annotate($("input").value);
  $("annotated").textContent = corpus
    .split("\n")
    .filter((l) => l)
    .map((l) => JSON.stringify(JSON.parse(l), null, 2))
    .join("\n\n");
}

await init();

$("annotate").addEventListener("click", runAnnotate);
$("detect").addEventListener("click", () => {
  $("lang").textContent = detectLanguage($("lang-input").value);
});
$("draw").addEventListener("click", () => {
  if (!corpus) runAnnotate();
  try {
    $("cloud").innerHTML = wordCloud(corpus, $("key").value, $("terms").value);
  } catch (err) {
    $("cloud").textContent = String(err);
  }
});

runAnnotate();
