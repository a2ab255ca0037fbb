// length of a string
int my_strlen(const char *line)
{
    int count = 0;
    while (line[count] != '\0')
        count++;
    return count;
}

int main()
{
    char line[1000];
    scanf("%s", line);
    printf("%d\n", my_strlen(line));
    return 0;
}
