/** Browser-only rendering of a Scene into an SVG element. */
import { canvasSize, hitVertex, toCanvas, wirePath } from "./geometry.js";
const NS = "http://www.w3.org/2000/svg";
export function renderScene(scene, onVertexClick) {
    const { width, height } = canvasSize(scene);
    const svg = document.createElementNS(NS, "svg");
    svg.setAttribute("width", String(width));
    svg.setAttribute("height", String(height));
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    for (const region of scene.regions) {
        const text = document.createElementNS(NS, "text");
        text.setAttribute("x", String(MARGIN_HALF));
        text.setAttribute("y", "16");
        text.setAttribute("class", "region-label");
        text.textContent = region.label;
        svg.appendChild(text);
    }
    for (const wire of scene.wires) {
        const path = document.createElementNS(NS, "path");
        path.setAttribute("d", wirePath(scene, wire));
        path.setAttribute("class", "wire");
        const title = document.createElementNS(NS, "title");
        title.textContent = wire.label;
        path.appendChild(title);
        svg.appendChild(path);
    }
    scene.vertices.forEach((vertex, index) => {
        const { cx, cy } = toCanvas(scene, vertex.x, vertex.y);
        const group = document.createElementNS(NS, "g");
        group.setAttribute("class", "vertex");
        group.addEventListener("click", () => onVertexClick(index));
        const circle = document.createElementNS(NS, "circle");
        circle.setAttribute("cx", cx.toFixed(1));
        circle.setAttribute("cy", cy.toFixed(1));
        circle.setAttribute("r", "11");
        const label = document.createElementNS(NS, "text");
        label.setAttribute("x", cx.toFixed(1));
        label.setAttribute("y", (cy + 4).toFixed(1));
        label.setAttribute("text-anchor", "middle");
        label.textContent = vertex.label;
        group.appendChild(circle);
        group.appendChild(label);
        svg.appendChild(group);
    });
    svg.addEventListener("click", (event) => {
        const rect = svg.getBoundingClientRect();
        const index = hitVertex(scene, event.clientX - rect.left, event.clientY - rect.top);
        if (index !== null)
            onVertexClick(index);
    });
    return svg;
}
const MARGIN_HALF = 12;
