import { App } from './app';
import { HttpPipelineClient } from './client';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app root');

new App(root, new HttpPipelineClient());
