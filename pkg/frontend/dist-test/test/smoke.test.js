/** UI smoke test against the live Python service: load the demo document,
 * apply one interchange through a vertex click, undo, and check the scene
 * equals the initial render. */
import assert from "node:assert/strict";
import { after, before, test } from "node:test";
import { spawn } from "node:child_process";
import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import path from "node:path";
import { ServiceClient } from "../src/api.js";
import { scenesEqual } from "../src/geometry.js";
import { ViewModel } from "../src/viewmodel.js";
const here = path.dirname(fileURLToPath(import.meta.url));
const repo = path.resolve(here, "..", "..", "..");
const demoPath = path.join(repo, "src", "strata", "corpus", "interchange_demo.hdprf");
const port = 8700 + (process.pid % 800);
const base = `http://127.0.0.1:${port}`;
let server;
async function waitUntilUp() {
    for (let i = 0; i < 100; i += 1) {
        try {
            const response = await fetch(`${base}/sessions/none/state`);
            if (response.status === 404)
                return;
        }
        catch {
            // not listening yet
        }
        await new Promise((resolve) => setTimeout(resolve, 150));
    }
    throw new Error("service did not come up");
}
before(async () => {
    server = spawn("python3", ["-m", "strata.cli", "serve", "--port", String(port)], { cwd: repo, stdio: "ignore" });
    await waitUntilUp();
});
after(() => {
    server.kill();
});
test("load, click, apply, undo returns the initial scene", async () => {
    const vm = new ViewModel(new ServiceClient(base));
    await vm.load(readFileSync(demoPath, "utf-8"));
    assert.equal(vm.state.error, null);
    const initial = vm.state.scene;
    assert.ok(initial && initial.vertices.length === 2);
    await vm.clickVertex(0);
    assert.ok(vm.state.moves.length >= 1);
    assert.equal(vm.state.moves[0].family, "I");
    await vm.applyMove(vm.state.moves[0]);
    assert.equal(vm.state.error, null);
    assert.equal(vm.state.script.length, 1);
    assert.ok(!scenesEqual(vm.state.scene, initial));
    const exported = await vm.exportDocument();
    assert.ok(exported && exported.includes('"goal": "current"'));
    await vm.undo();
    assert.equal(vm.state.error, null);
    assert.equal(vm.state.script.length, 0);
    assert.ok(scenesEqual(vm.state.scene, initial));
});
test("clicking where nothing applies yields an empty palette note", async () => {
    const vm = new ViewModel(new ServiceClient(base));
    await vm.load(readFileSync(demoPath, "utf-8"));
    await vm.clickLocation({ height: 1, coords: [] });
    assert.deepEqual(vm.state.moves, []);
    assert.match(vm.state.note ?? "", /no moves/);
});
test("server errors surface inline with the step index", async () => {
    const vm = new ViewModel(new ServiceClient(base));
    await vm.load(readFileSync(demoPath, "utf-8"));
    await vm.applyStep({ move: "homotopy", family: "I", height: 9, direction: "forward" });
    assert.match(vm.state.error ?? "", /step 0.*409/s);
});
