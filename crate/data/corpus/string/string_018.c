/* reverse a string in place */
void reverse(char *line)
{
    int i = 0, j = strlen(line) - 1;
    char c;
    while (i < j) {
        c = line[i];
        line[i] = line[j];
        line[j] = c;
        i++;
        j--;
    }
}

int main()
{
    char line[256];
    scanf("%s", line);
    reverse(line);
    printf("%s\n", line);
    return 0;
}
